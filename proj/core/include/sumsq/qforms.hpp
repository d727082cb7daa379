#pragma once

// Positive definite binary quadratic forms ax^2 + bxy + cy^2: reduced-form
// enumeration, class numbers h(D), Hurwitz class numbers H(N), and the
// correspondence between solutions of rs + rt + st = n and reduced forms
// of discriminant -4n.

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sumsq/counts.hpp"
#include "sumsq/rational.hpp"

namespace sumsq::qforms {

enum class FormType { I, II, III, IV };

std::string_view to_string(FormType t);

struct QuadForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const noexcept { return b * b - 4 * a * c; }
    std::int64_t content() const noexcept;
    bool primitive() const noexcept { return content() == 1; }
    bool positive_definite() const noexcept { return a > 0 && discriminant() < 0; }
    // |b| <= a <= c, and b >= 0 when |b| = a or a = c.
    bool reduced() const noexcept;
    // Only meaningful for reduced forms.
    FormType form_type() const noexcept;
    // Weight in the Hurwitz count: 1/2 on g(1,0,1), 1/3 on g(1,1,1), else 1.
    Rat hurwitz_weight() const;

    friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

std::string to_string(const QuadForm& f);

// D < 0 and D = 0, 1 (mod 4).
bool is_discriminant(std::int64_t D) noexcept;
// Negative fundamental discriminant in the two-case congruence sense.
bool is_fundamental(std::int64_t D) noexcept;

// All reduced forms (primitive and imprimitive) of discriminant D, sorted by
// (a, b, c). Throws DomainError("not a discriminant") on invalid D.
std::vector<QuadForm> enumerate_reduced(std::int64_t D);

// Number of primitive reduced forms. Memoised in default_cache().
std::int64_t class_number_h(std::int64_t D);
// 6 for D = -3, 4 for D = -4, 2 otherwise.
int omega(std::int64_t D);
// h(D) / (omega(D)/2).
Rat h_prime(std::int64_t D);

// Weighted count of reduced forms of discriminant -N; 0 for N = 1, 2 mod 4
// and -1/12 for N = 0. Memoised in default_cache().
Rat hurwitz_direct(std::int64_t N);
// sum over d^2 | N of h'(-N/d^2); non-discriminant quotients contribute 0.
Rat hurwitz_divisor_sum(std::int64_t N);

// Kronecker symbol (a/n) for any integer n.
int kronecker_symbol(std::int64_t a, std::int64_t n);

struct DirichletRatio {
    Rat lhs;
    Rat rhs;
    bool equal() const { return lhs == rhs; }
};

// h(D)/w(D) against h(D0)/w(D0) f prod_{p|f} (1 - (D0/p)/p), D = D0 f^2.
// Throws DomainError unless D0 is a negative fundamental discriminant and f >= 1.
DirichletRatio dirichlet_ratio(std::int64_t D0, std::int64_t f);
bool dirichlet_ratio_check(std::int64_t D0, std::int64_t f);

// H(4n) = 4H(n) for n = 3 (mod 8), 2H(n) for n = 7 (mod 8).
// Throws DomainError unless n = 3 (mod 4).
bool hurwitz_4n_lemma_check(std::int64_t n);

// (r, s, t) -> (s+t, 2t, r+t), a reduced form of discriminant -4(rs+rt+st).
// Throws ConsistencyError if the result is not reduced or has the wrong
// discriminant, DomainError if the triple is not ordered r >= s >= t >= 1.
QuadForm triple_to_form(const counts::Triple& t);

enum class ContentClass { primitive, even, odd };

struct FormCensus {
    std::int64_t discriminant = 0;
    // counts[type][content class]
    std::array<std::array<std::int64_t, 3>, 4> counts{};

    std::int64_t type_count(FormType t) const;
    std::int64_t content_count(ContentClass c) const;
    std::int64_t total() const;
    // Imprimitive forms with odd content > 1.
    std::int64_t A() const { return content_count(ContentClass::odd); }
};

ContentClass content_class(const QuadForm& f) noexcept;
FormCensus classify_forms(std::int64_t D);

// r_3(n) from the Hurwitz class number clause selected by n mod 8, after
// stripping factors of 4. Compared against brute-force r_3(n).
std::int64_t gauss_r3_formula(std::int64_t n);
bool gauss_r3_check(std::int64_t n);

// N_3(n) from 12 delta_n h(-4n) (n = 1,2,5,6 mod 8) or 24 delta_n h(-n)
// (n = 3 mod 8). Throws DomainError("theorem does not apply") otherwise.
std::int64_t gauss_N3_formula(std::int64_t n);
bool gauss_N3_check(std::int64_t n);
bool gauss_N3_applies(std::int64_t n) noexcept;

// For n = 3 (mod 4): r_3(n) = 12 (2h(-4n) - H(4n) + 2A(-4n)), the weighted
// form count with the odd-content imprimitive forms tallied separately.
bool weighted_form_assembly_check(std::int64_t n);

struct BijectionReport {
    std::int64_t n = 0;
    std::vector<std::pair<counts::Triple, QuadForm>> pairs;
    bool injective = true;
    // Image equals the reduced forms of discriminant -4n with b > 0.
    bool image_matches = true;
    // Strict triples land on type II, two-equal on type III, all-equal on IV.
    bool types_match = true;
    // Type I forms number ceil(d(n)/2).
    bool type_i_matches = true;

    bool ok() const { return injective && image_matches && types_match && type_i_matches; }
};

BijectionReport bijection_census(std::int64_t n);

// Thread-safe memo of h(D) (keyed by D < 0) and H(N) (keyed by N >= 0).
class ClassNumberCache {
public:
    std::optional<std::int64_t> find_h(std::int64_t D) const;
    std::optional<Rat> find_H(std::int64_t N) const;
    void store_h(std::int64_t D, std::int64_t value);
    void store_H(std::int64_t N, const Rat& value);

    // Entries in key order: negative keys are h(D), non-negative keys H(N).
    std::map<std::int64_t, Rat> snapshot() const;
    void clear();
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::int64_t, std::int64_t> h_;
    std::unordered_map<std::int64_t, Rat> H_;
};

ClassNumberCache& default_cache();

// Uncached evaluations, used to validate persisted tables.
std::int64_t class_number_h_uncached(std::int64_t D);
Rat hurwitz_direct_uncached(std::int64_t N);

} // namespace sumsq::qforms
