#include "sumsq/qforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sumsq/errors.hpp"

namespace sumsq::qforms {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) noexcept
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

bool squarefree(std::int64_t n) noexcept
{
    n = n < 0 ? -n : n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n)
{
    std::vector<std::int64_t> ps;
    n = n < 0 ? -n : n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        ps.push_back(n);
    }
    return ps;
}

__extension__ typedef __int128 wide_t;

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod)
{
    wide_t result = 1;
    wide_t b = floor_mod(base, mod);
    while (exp > 0) {
        if (exp & 1) {
            result = (result * b) % mod;
        }
        b = (b * b) % mod;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

int legendre_odd_prime(std::int64_t a, std::int64_t p)
{
    if (floor_mod(a, p) == 0) {
        return 0;
    }
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int kronecker_two(std::int64_t a) noexcept
{
    if (a % 2 == 0) {
        return 0;
    }
    const std::int64_t r = floor_mod(a, 8);
    return (r == 1 || r == 7) ? 1 : -1;
}

void require_discriminant(std::int64_t D)
{
    if (!is_discriminant(D)) {
        throw DomainError("not a discriminant: " + std::to_string(D));
    }
}

} // namespace

std::string_view to_string(FormType t)
{
    switch (t) {
    case FormType::I:
        return "I";
    case FormType::II:
        return "II";
    case FormType::III:
        return "III";
    case FormType::IV:
        return "IV";
    }
    return "?";
}

std::int64_t QuadForm::content() const noexcept { return std::gcd(std::gcd(a, b), c); }

bool QuadForm::reduced() const noexcept
{
    const std::int64_t ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c)) {
        return false;
    }
    if ((ab == a || a == c) && b < 0) {
        return false;
    }
    return true;
}

FormType QuadForm::form_type() const noexcept
{
    if (b == 0) {
        return FormType::I;
    }
    if (b == a && a == c) {
        return FormType::IV;
    }
    if (b == a || a == c) {
        return FormType::III;
    }
    return FormType::II;
}

Rat QuadForm::hurwitz_weight() const
{
    const std::int64_t g = content();
    if (a == g && b == 0 && c == g) {
        return Rat(1, 2);
    }
    if (a == g && b == g && c == g) {
        return Rat(1, 3);
    }
    return Rat(1);
}

std::string to_string(const QuadForm& f)
{
    std::ostringstream os;
    os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
    return os.str();
}

bool is_discriminant(std::int64_t D) noexcept
{
    if (D >= 0) {
        return false;
    }
    const std::int64_t r = floor_mod(D, 4);
    return r == 0 || r == 1;
}

bool is_fundamental(std::int64_t D) noexcept
{
    if (D >= 0 || D == 1) {
        return false;
    }
    if (floor_mod(D, 4) == 1) {
        return squarefree(D);
    }
    if (floor_mod(D, 4) == 0) {
        const std::int64_t m = D / 4;
        const std::int64_t r = floor_mod(m, 4);
        return squarefree(m) && (r == 2 || r == 3);
    }
    return false;
}

std::vector<QuadForm> enumerate_reduced(std::int64_t D)
{
    require_discriminant(D);
    std::vector<QuadForm> out;
    const std::int64_t absD = -D;
    // Reduced forms satisfy 3a^2 <= |D|.
    for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (floor_mod(b - D, 2) != 0) {
                continue;
            }
            const std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) {
                continue;
            }
            const QuadForm f{a, b, num / (4 * a)};
            if (f.reduced()) {
                out.push_back(f);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t class_number_h_uncached(std::int64_t D)
{
    const auto forms = enumerate_reduced(D);
    return std::count_if(forms.begin(), forms.end(), [](const QuadForm& f) { return f.primitive(); });
}

std::int64_t class_number_h(std::int64_t D)
{
    require_discriminant(D);
    ClassNumberCache& cache = default_cache();
    if (auto hit = cache.find_h(D)) {
        return *hit;
    }
    const std::int64_t h = class_number_h_uncached(D);
    cache.store_h(D, h);
    return h;
}

int omega(std::int64_t D)
{
    require_discriminant(D);
    if (D == -3) {
        return 6;
    }
    if (D == -4) {
        return 4;
    }
    return 2;
}

Rat h_prime(std::int64_t D) { return Rat(class_number_h(D) * 2, omega(D)); }

Rat hurwitz_direct_uncached(std::int64_t N)
{
    if (N < 0) {
        throw DomainError("hurwitz: N must be non-negative, got " + std::to_string(N));
    }
    if (N == 0) {
        return Rat(-1, 12);
    }
    const std::int64_t r = N % 4;
    if (r == 1 || r == 2) {
        return Rat(0);
    }
    Rat total(0);
    for (const QuadForm& f : enumerate_reduced(-N)) {
        total += f.hurwitz_weight();
    }
    return total;
}

Rat hurwitz_direct(std::int64_t N)
{
    if (N < 0) {
        throw DomainError("hurwitz: N must be non-negative, got " + std::to_string(N));
    }
    ClassNumberCache& cache = default_cache();
    if (auto hit = cache.find_H(N)) {
        return *hit;
    }
    const Rat H = hurwitz_direct_uncached(N);
    cache.store_H(N, H);
    return H;
}

Rat hurwitz_divisor_sum(std::int64_t N)
{
    if (N < 1) {
        throw DomainError("hurwitz_divisor_sum: N must be positive, got " + std::to_string(N));
    }
    if (N % 4 == 1 || N % 4 == 2) {
        return Rat(0);
    }
    Rat total(0);
    for (std::int64_t d = 1; d * d <= N; ++d) {
        if (N % (d * d) != 0) {
            continue;
        }
        const std::int64_t D = -(N / (d * d));
        if (is_discriminant(D)) {
            total += h_prime(D);
        }
    }
    return total;
}

int kronecker_symbol(std::int64_t a, std::int64_t n)
{
    if (n == 0) {
        return (a == 1 || a == -1) ? 1 : 0;
    }
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) {
            result = -result;
        }
    }
    while (n % 2 == 0) {
        n /= 2;
        result *= kronecker_two(a);
    }
    for (std::int64_t p = 3; p * p <= n; p += 2) {
        while (n % p == 0) {
            n /= p;
            result *= legendre_odd_prime(a, p);
        }
    }
    if (n > 1) {
        result *= legendre_odd_prime(a, n);
    }
    return result;
}

DirichletRatio dirichlet_ratio(std::int64_t D0, std::int64_t f)
{
    if (!is_fundamental(D0)) {
        throw DomainError("not a fundamental discriminant: " + std::to_string(D0));
    }
    if (f < 1) {
        throw DomainError("conductor f must be positive");
    }
    const std::int64_t D = D0 * f * f;
    DirichletRatio out;
    out.lhs = Rat(class_number_h(D), omega(D));
    Rat rhs = Rat(class_number_h(D0), omega(D0)) * Rat(f);
    for (std::int64_t p : prime_factors(f)) {
        rhs *= Rat(1) - Rat(kronecker_symbol(D0, p), p);
    }
    out.rhs = rhs;
    return out;
}

bool dirichlet_ratio_check(std::int64_t D0, std::int64_t f) { return dirichlet_ratio(D0, f).equal(); }

bool hurwitz_4n_lemma_check(std::int64_t n)
{
    if (n < 1 || n % 4 != 3) {
        throw DomainError("hurwitz_4n_lemma_check: n must be 3 mod 4, got " + std::to_string(n));
    }
    const std::int64_t multiplier = (n % 8 == 3) ? 4 : 2;
    return hurwitz_direct(4 * n) == Rat(multiplier) * hurwitz_direct(n);
}

QuadForm triple_to_form(const counts::Triple& t)
{
    if (!(t.r >= t.s && t.s >= t.t && t.t >= 1)) {
        throw DomainError("triple_to_form: need r >= s >= t >= 1");
    }
    const QuadForm f{t.s + t.t, 2 * t.t, t.r + t.t};
    if (f.discriminant() != -4 * t.value() || !f.reduced()) {
        throw ConsistencyError("triple_to_form: image " + to_string(f) + " is not a reduced form of discriminant " +
                               std::to_string(-4 * t.value()));
    }
    return f;
}

ContentClass content_class(const QuadForm& f) noexcept
{
    const std::int64_t g = f.content();
    if (g == 1) {
        return ContentClass::primitive;
    }
    return g % 2 == 0 ? ContentClass::even : ContentClass::odd;
}

std::int64_t FormCensus::type_count(FormType t) const
{
    const auto& row = counts[static_cast<std::size_t>(t)];
    return row[0] + row[1] + row[2];
}

std::int64_t FormCensus::content_count(ContentClass c) const
{
    std::int64_t total = 0;
    for (const auto& row : counts) {
        total += row[static_cast<std::size_t>(c)];
    }
    return total;
}

std::int64_t FormCensus::total() const
{
    std::int64_t total = 0;
    for (const auto& row : counts) {
        total += row[0] + row[1] + row[2];
    }
    return total;
}

FormCensus classify_forms(std::int64_t D)
{
    FormCensus census;
    census.discriminant = D;
    for (const QuadForm& f : enumerate_reduced(D)) {
        ++census.counts[static_cast<std::size_t>(f.form_type())][static_cast<std::size_t>(content_class(f))];
    }
    return census;
}

std::int64_t gauss_r3_formula(std::int64_t n)
{
    if (n < 1) {
        throw DomainError("gauss_r3: n must be positive");
    }
    std::int64_t m = n;
    while (m % 4 == 0) {
        m /= 4;
    }
    Rat value(0);
    switch (m % 8) {
    case 1:
    case 2:
    case 5:
    case 6:
        value = Rat(12) * hurwitz_direct(4 * m);
        break;
    case 3:
        value = Rat(24) * hurwitz_direct(m);
        break;
    case 7:
        value = Rat(0);
        break;
    default:
        throw ConsistencyError("gauss_r3: residue after stripping 4s must not be 0 or 4 mod 8");
    }
    if (!is_integer(value)) {
        throw ConsistencyError("gauss_r3: class-number expression " + sumsq::to_string(value) + " is not an integer at n=" +
                               std::to_string(n));
    }
    return value.numerator();
}

bool gauss_r3_check(std::int64_t n) { return gauss_r3_formula(n) == counts::r_squares(3, n); }

bool gauss_N3_applies(std::int64_t n) noexcept
{
    if (n < 1) {
        return false;
    }
    const std::int64_t r = n % 8;
    return r == 1 || r == 2 || r == 3 || r == 5 || r == 6;
}

std::int64_t gauss_N3_formula(std::int64_t n)
{
    if (!gauss_N3_applies(n)) {
        throw DomainError("theorem does not apply: n=" + std::to_string(n));
    }
    const Rat delta = n == 1 ? Rat(1, 2) : (n == 3 ? Rat(1, 3) : Rat(1));
    const Rat value = (n % 8 == 3) ? Rat(24) * delta * Rat(class_number_h(-n))
                                   : Rat(12) * delta * Rat(class_number_h(-4 * n));
    if (!is_integer(value)) {
        throw ConsistencyError("gauss_N3: non-integral value at n=" + std::to_string(n));
    }
    return value.numerator();
}

bool gauss_N3_check(std::int64_t n) { return gauss_N3_formula(n) == counts::n3_primitive(n); }

bool weighted_form_assembly_check(std::int64_t n)
{
    if (n < 1 || n % 4 != 3) {
        throw DomainError("weighted_form_assembly_check: n must be 3 mod 4");
    }
    const FormCensus census = classify_forms(-4 * n);
    const Rat value =
        Rat(12) * (Rat(2 * class_number_h(-4 * n)) - hurwitz_direct(4 * n) + Rat(2 * census.A()));
    return value == Rat(counts::r_squares(3, n));
}

BijectionReport bijection_census(std::int64_t n)
{
    BijectionReport report;
    report.n = n;
    std::set<QuadForm> image;
    for (const counts::Triple& t : counts::sorted_solutions(n)) {
        const QuadForm f = triple_to_form(t);
        report.pairs.emplace_back(t, f);
        if (!image.insert(f).second) {
            report.injective = false;
        }
        const bool all_equal = t.r == t.s && t.s == t.t;
        const bool two_equal = !all_equal && (t.r == t.s || t.s == t.t);
        const FormType expected = all_equal ? FormType::IV : (two_equal ? FormType::III : FormType::II);
        if (f.form_type() != expected) {
            report.types_match = false;
        }
    }
    std::set<QuadForm> positive_b;
    std::int64_t type_i = 0;
    for (const QuadForm& f : enumerate_reduced(-4 * n)) {
        if (f.b > 0) {
            positive_b.insert(f);
        }
        if (f.form_type() == FormType::I) {
            ++type_i;
        }
    }
    report.image_matches = (image == positive_b);
    report.type_i_matches = (type_i == (counts::divisor_count(n) + 1) / 2);
    return report;
}

std::optional<std::int64_t> ClassNumberCache::find_h(std::int64_t D) const
{
    std::shared_lock lock(mutex_);
    if (auto it = h_.find(D); it != h_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::optional<Rat> ClassNumberCache::find_H(std::int64_t N) const
{
    std::shared_lock lock(mutex_);
    if (auto it = H_.find(N); it != H_.end()) {
        return it->second;
    }
    return std::nullopt;
}

void ClassNumberCache::store_h(std::int64_t D, std::int64_t value)
{
    std::unique_lock lock(mutex_);
    h_.insert_or_assign(D, value);
}

void ClassNumberCache::store_H(std::int64_t N, const Rat& value)
{
    std::unique_lock lock(mutex_);
    H_.insert_or_assign(N, value);
}

std::map<std::int64_t, Rat> ClassNumberCache::snapshot() const
{
    std::shared_lock lock(mutex_);
    std::map<std::int64_t, Rat> out;
    for (const auto& [D, h] : h_) {
        out.emplace(D, Rat(h));
    }
    for (const auto& [N, H] : H_) {
        out.emplace(N, H);
    }
    return out;
}

void ClassNumberCache::clear()
{
    std::unique_lock lock(mutex_);
    h_.clear();
    H_.clear();
}

std::size_t ClassNumberCache::size() const
{
    std::shared_lock lock(mutex_);
    return h_.size() + H_.size();
}

ClassNumberCache& default_cache()
{
    static ClassNumberCache cache;
    return cache;
}

} // namespace sumsq::qforms
