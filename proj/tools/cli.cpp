#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumsq/battery.hpp"
#include "sumsq/counts.hpp"
#include "sumsq/errors.hpp"
#include "sumsq/genfun.hpp"
#include "sumsq/qforms.hpp"
#include "sumsq/version.hpp"
#include "sweep.hpp"
#include "table.hpp"

namespace sumsq::cli {

namespace {

// Thrown for bad input the parser itself cannot catch.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    unsigned jobs = 1;
    std::optional<int> precision;
    double tolerance = 1e-12;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::size_t order = 100;
    std::optional<std::int64_t> from;
    std::optional<std::int64_t> to;
};

Format parse_format(const std::string& s)
{
    if (s == "text") {
        return Format::text;
    }
    if (s == "csv") {
        return Format::csv;
    }
    if (s == "json") {
        return Format::json;
    }
    throw UsageError("unknown format '" + s + "' (expected text, csv or json)");
}

std::optional<std::int64_t> parse_int(std::string_view s)
{
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) {
        return std::nullopt;
    }
    return v;
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string complex_text(std::complex<double> z)
{
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

unsigned effective_jobs(unsigned jobs)
{
    if (jobs == 0) {
        return std::max(1u, std::thread::hardware_concurrency());
    }
    return jobs;
}

// ---------------------------------------------------------------- reports

struct CheckLine {
    std::string id;
    std::string scope;
    bool passed = true;
    std::int64_t cases = 0;
    std::string detail;
    std::vector<std::string> notes;
};

struct RunReport {
    std::string command;
    std::vector<CheckLine> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
    }
};

void print_report(std::ostream& out, const RunReport& report, Format format)
{
    const std::string engine = std::string("sumsq ") + kVersion;
    switch (format) {
    case Format::json: {
        nlohmann::ordered_json j;
        j["command"] = report.command;
        j["engine"] = engine;
        j["passed"] = report.passed();
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : report.checks) {
            nlohmann::ordered_json o;
            o["id"] = c.id;
            o["scope"] = c.scope;
            o["passed"] = c.passed;
            o["cases"] = c.cases;
            o["detail"] = c.detail;
            o["notes"] = c.notes;
            j["checks"].push_back(std::move(o));
        }
        out << j.dump(2) << '\n';
        return;
    }
    case Format::csv: {
        Table t{{"id", "scope", "passed", "cases", "detail"}, {}};
        for (const auto& c : report.checks) {
            std::string detail = c.detail;
            for (const auto& n : c.notes) {
                detail += (detail.empty() ? "" : "; ") + n;
            }
            t.add({c.id, c.scope, c.passed, c.cases, detail});
        }
        write_table(out, t, Format::csv);
        return;
    }
    case Format::text:
        out << "command: " << report.command << '\n';
        for (const auto& c : report.checks) {
            out << (c.passed ? "PASS" : "FAIL") << "  " << c.id << "  " << c.scope << "  cases=" << c.cases;
            if (!c.detail.empty()) {
                out << "  " << c.detail;
            }
            out << '\n';
            for (const auto& n : c.notes) {
                out << "    " << n << '\n';
            }
        }
        out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
        out << "engine: " << engine << '\n';
        return;
    }
}

// ----------------------------------------------------------------- verify

std::string range_scope(std::int64_t from, std::int64_t to, const char* var = "n")
{
    return std::string(var) + "=" + std::to_string(from) + ".." + std::to_string(to);
}

CheckLine sweep_line(std::string id, std::int64_t from, std::int64_t to, const SweepOutcome& s, const char* var = "n")
{
    CheckLine line;
    line.id = std::move(id);
    line.scope = range_scope(from, to, var);
    line.passed = s.ok();
    line.cases = s.checked;
    if (s.first_failure) {
        line.detail = std::to_string(s.failures) + " failures; first at " + var + "=" +
                      std::to_string(s.first_failure->first) + ": " + s.first_failure->second;
    }
    return line;
}

using SweepCheck = std::function<CaseResult(std::int64_t)>;

struct SweepSpec {
    std::int64_t default_to;
    SweepCheck check;
    const char* var = "n";
};

std::string rat_pair(const Rat& a, const Rat& b) { return to_string(a) + " vs " + to_string(b); }

const std::map<std::string, SweepSpec>& sweep_checks()
{
    using counts::r_squares;
    static const std::map<std::string, SweepSpec> table{
        {"andrews-crandall",
         {1000,
          [](std::int64_t n) {
              const auto a = counts::andrews_crandall_r3(n);
              const auto b = r_squares(3, n);
              return CaseResult::check(a == b, std::to_string(a) + " vs r3=" + std::to_string(b));
          }}},
        {"parity-lemma",
         {1000,
          [](std::int64_t n) {
              if (n % 4 != 1 && n % 4 != 2) {
                  return CaseResult::skip();
              }
              return CaseResult::check(counts::parity_lemma_check(n), "parity relation does not hold");
          }}},
        {"propositions",
         {1000, [](std::int64_t n) { return CaseResult::check(counts::proposition_checks(n), "r3 formula mismatch"); }}},
        {"decomposition",
         {1000,
          [](std::int64_t n) {
              const auto d = counts::decompose_solutions(n);
              const bool ok = d.total == 6 * d.strict + 3 * d.two_equal + d.all_equal;
              return CaseResult::check(ok, "total=" + std::to_string(d.total));
          }}},
        {"hurwitz-equivalence",
         {1000,
          [](std::int64_t n) {
              if (n % 4 != 0 && n % 4 != 3) {
                  return CaseResult::skip();
              }
              const Rat a = qforms::hurwitz_direct(n);
              const Rat b = qforms::hurwitz_divisor_sum(n);
              return CaseResult::check(a == b, rat_pair(a, b));
          },
          "N"}},
        {"dirichlet-ratio",
         {200,
          [](std::int64_t m) {
              const std::int64_t D0 = -m;
              if (!qforms::is_fundamental(D0)) {
                  return CaseResult::skip();
              }
              for (std::int64_t f = 1; f <= 6; ++f) {
                  const auto r = qforms::dirichlet_ratio(D0, f);
                  if (!r.equal()) {
                      return CaseResult::fail("f=" + std::to_string(f) + ": " + rat_pair(r.lhs, r.rhs));
                  }
              }
              return CaseResult::pass();
          },
          "|D0|"}},
        {"hurwitz-4n",
         {1000,
          [](std::int64_t n) {
              if (n % 4 != 3) {
                  return CaseResult::skip();
              }
              return CaseResult::check(qforms::hurwitz_4n_lemma_check(n), "H(4n) multiplier mismatch");
          }}},
        {"gauss-r3",
         {1000,
          [](std::int64_t n) {
              const auto a = qforms::gauss_r3_formula(n);
              const auto b = r_squares(3, n);
              return CaseResult::check(a == b, std::to_string(a) + " vs r3=" + std::to_string(b));
          }}},
        {"gauss-N3",
         {1000,
          [](std::int64_t n) {
              if (!qforms::gauss_N3_applies(n)) {
                  return CaseResult::skip();
              }
              const auto a = qforms::gauss_N3_formula(n);
              const auto b = counts::n3_primitive(n);
              return CaseResult::check(a == b, std::to_string(a) + " vs N3=" + std::to_string(b));
          }}},
    };
    return table;
}

std::vector<CheckLine> verify_series(genfun::IdentityId id, const Options& opt)
{
    std::vector<CheckLine> lines;
    for (const auto& r : genfun::run_identity(id, opt.order)) {
        CheckLine line;
        line.id = std::string(genfun::to_string(id));
        line.scope = "order=" + std::to_string(r.order);
        line.passed = r.passed;
        line.cases = static_cast<std::int64_t>(r.order) + 1;
        line.notes.push_back(r.label);
        if (r.first_mismatch) {
            line.detail = "first mismatch at q^" + std::to_string(r.first_mismatch->exponent) + ": " +
                          r.first_mismatch->lhs.str() + " vs " + r.first_mismatch->rhs.str();
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

std::vector<CheckLine> verify_numeric(numeric::NumericIdentity id, const Options& opt, int precision)
{
    using namespace numeric;
    std::vector<SamplePoint> points;
    std::string origin;
    if (opt.seed) {
        points = generate_battery(id, *opt.seed, opt.samples.value_or(kBatterySize));
        origin = "seed=" + std::to_string(*opt.seed);
    } else {
        points = frozen_battery(id);
        if (opt.samples) {
            if (*opt.samples > points.size()) {
                throw UsageError("--samples exceeds the stored battery (" + std::to_string(points.size()) +
                                 "); pass --seed to generate more");
            }
            points.resize(*opt.samples);
        }
        origin = "frozen";
    }
    EvalContext ctx;
    ctx.precision_digits = precision;
    ctx.tolerance = opt.tolerance;
    ctx.validate();
    const unsigned jobs = effective_jobs(opt.jobs);
    const BatteryReport report = run_battery(id, ctx, points, jobs);

    CheckLine line;
    line.id = std::string(to_string(id));
    line.scope = "samples=" + std::to_string(points.size()) + " " + origin;
    line.passed = report.ok();
    line.cases = static_cast<std::int64_t>(report.passed + report.failed);
    line.detail = "passed=" + std::to_string(report.passed) + " failed=" + std::to_string(report.failed) +
                  " skipped=" + std::to_string(report.skipped) + " max_rel=" + sci(report.max_relative_error) +
                  " max_cert=" + sci(report.max_certificate);
    for (const auto& s : report.samples) {
        if (s.status == SampleStatus::skipped) {
            line.notes.push_back("sample " + std::to_string(s.index) + " skipped: " + s.message);
        } else if (s.status == SampleStatus::failed) {
            std::string note = "sample " + std::to_string(s.index) + " failed:";
            if (!s.message.empty()) {
                note += " " + s.message;
            }
            for (const auto& r : s.results) {
                if (!r.passed) {
                    note += " [" + r.variant + " rel=" + sci(r.relative_error) + " cert=" + sci(r.certificate) +
                            " lhs=" + complex_text(r.lhs) + " rhs=" + complex_text(r.rhs) + "]";
                }
            }
            line.notes.push_back(note);
        }
    }
    std::vector<CheckLine> lines{line};

    // Stability at +20 digits, over the points that passed.
    std::vector<std::size_t> passing;
    for (const auto& s : report.samples) {
        if (s.status == SampleStatus::passed) {
            passing.push_back(s.index);
        }
    }
    const auto stab = sweep(0, static_cast<std::int64_t>(passing.size()) - 1, jobs, [&](std::int64_t k) {
        EvalContext c = ctx;
        c.point = points[passing[static_cast<std::size_t>(k)]];
        const auto e = precision_escalation(id, c);
        return CaseResult::check(e.stable, "sample " + std::to_string(passing[static_cast<std::size_t>(k)]) +
                                               ": " + sci(e.base_error) + " -> " + sci(e.escalated_error));
    });
    CheckLine esc;
    esc.id = line.id + "/escalation";
    esc.scope = "precision " + std::to_string(precision) + "->" + std::to_string(precision + 20);
    esc.passed = stab.ok();
    esc.cases = stab.checked;
    if (stab.first_failure) {
        esc.detail = stab.first_failure->second;
    }
    lines.push_back(std::move(esc));
    return lines;
}

int resolve_precision(const Options& opt, const Environment& env)
{
    if (opt.precision) {
        return *opt.precision;
    }
    if (env.precision) {
        const auto v = parse_int(*env.precision);
        if (!v || *v < 10 || *v > 10000) {
            throw UsageError(std::string(kPrecisionEnv) + " must be an integer in 10..10000, got '" + *env.precision +
                             "'");
        }
        return static_cast<int>(*v);
    }
    return 50;
}

int cmd_verify(const std::string& id, const Options& opt, const Environment& env, const std::string& command,
               std::ostream& out)
{
    RunReport report;
    report.command = command;
    const Format format = parse_format(opt.format);

    if (const auto gid = genfun::parse_identity_id(id)) {
        report.checks = verify_series(*gid, opt);
    } else if (const auto nid = numeric::parse_numeric_identity(id)) {
        report.checks = verify_numeric(*nid, opt, resolve_precision(opt, env));
    } else {
        const auto& table = sweep_checks();
        const auto it = table.find(id);
        if (it == table.end()) {
            throw UsageError("unknown identity id '" + id + "'");
        }
        const std::int64_t from = opt.from.value_or(1);
        const std::int64_t to = opt.to.value_or(it->second.default_to);
        if (from < 1 || from > to) {
            throw UsageError("range must satisfy 1 <= from <= to");
        }
        const auto outcome = sweep(from, to, effective_jobs(opt.jobs), it->second.check);
        report.checks.push_back(sweep_line(id, from, to, outcome, it->second.var));
    }
    print_report(out, report, format);
    return report.passed() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- compute

std::vector<std::int64_t> expand_arguments(const std::vector<std::string>& args)
{
    std::vector<std::int64_t> values;
    for (const auto& a : args) {
        const auto r = parse_range(a);
        if (!r) {
            throw UsageError("invalid argument '" + a + "' (expected an integer or a..b)");
        }
        if (r->second - r->first > 10'000'000) {
            throw UsageError("range '" + a + "' is too large");
        }
        for (std::int64_t n = r->first; n <= r->second; ++n) {
            values.push_back(n);
        }
    }
    if (values.empty()) {
        throw UsageError("compute needs at least one argument");
    }
    return values;
}

int cmd_compute(const std::string& fn, const std::vector<std::string>& args, const Options& opt, std::ostream& out)
{
    const Format format = parse_format(opt.format);
    std::function<Cell(std::int64_t)> eval;
    if (fn == "r2" || fn == "r3" || fn == "r4") {
        const int s = fn[1] - '0';
        eval = [s](std::int64_t n) { return Cell{counts::r_squares(s, n)}; };
    } else if (fn == "N3") {
        eval = [](std::int64_t n) { return Cell{counts::n3_primitive(n)}; };
    } else if (fn == "r3delta") {
        eval = [](std::int64_t n) { return Cell{counts::r_triangular3(n)}; };
    } else if (fn == "h") {
        eval = [](std::int64_t D) { return Cell{qforms::class_number_h(D)}; };
    } else if (fn == "H") {
        eval = [](std::int64_t N) { return Cell{to_string(qforms::hurwitz_direct(N))}; };
    } else {
        throw UsageError("unknown function '" + fn + "' (expected r3, r2, r4, N3, r3delta, h or H)");
    }
    Table t{{"input", "value"}, {}};
    for (const std::int64_t n : expand_arguments(args)) {
        try {
            t.add({n, eval(n)});
        } catch (const DomainError& e) {
            throw DomainError(fn + "(" + std::to_string(n) + "): " + e.what());
        }
    }
    write_table(out, t, format);
    return kExitOk;
}

// ------------------------------------------------------------------ forms

int cmd_forms(const std::string& d_text, const Options& opt, std::ostream& out)
{
    const Format format = parse_format(opt.format);
    const auto D = parse_int(d_text);
    if (!D) {
        throw UsageError("invalid discriminant '" + d_text + "'");
    }
    const auto forms = qforms::enumerate_reduced(*D);
    Table t{{"a", "b", "c", "content", "primitive", "type", "weight"}, {}};
    for (const auto& f : forms) {
        t.add({f.a, f.b, f.c, f.content(), f.primitive(), std::string(qforms::to_string(f.form_type())),
               to_string(f.hurwitz_weight())});
    }
    write_table(out, t, format);
    if (format == Format::text) {
        const auto census = qforms::classify_forms(*D);
        out << "h(" << *D << ") = " << qforms::class_number_h(*D) << "  H(" << -*D
            << ") = " << to_string(qforms::hurwitz_direct(-*D)) << "  A(" << *D << ") = " << census.A() << '\n';
    }
    return kExitOk;
}

// -------------------------------------------------------------- bijection

int cmd_bijection(const std::string& n_text, const Options& opt, std::ostream& out)
{
    const Format format = parse_format(opt.format);
    const auto n = parse_int(n_text);
    if (!n || *n < 1) {
        throw UsageError("bijection needs an integer n >= 1, got '" + n_text + "'");
    }
    const auto report = qforms::bijection_census(*n);
    const auto d = counts::decompose_solutions(*n);
    if (format == Format::text) {
        for (const auto& [tr, f] : report.pairs) {
            out << '(' << tr.r << ',' << tr.s << ',' << tr.t << ") -> " << qforms::to_string(f) << " ["
                << qforms::to_string(f.form_type()) << "]\n";
        }
        out << "decomposition: total=" << d.total << " strict=" << d.strict << " two_equal=" << d.two_equal
            << " all_equal=" << d.all_equal << " (" << d.total << " = 6*" << d.strict << " + 3*" << d.two_equal
            << " + " << d.all_equal << ")\n";
        out << "census: injective=" << (report.injective ? "yes" : "no")
            << " image=" << (report.image_matches ? "ok" : "mismatch")
            << " types=" << (report.types_match ? "ok" : "mismatch")
            << " type-I=" << (report.type_i_matches ? "ok" : "mismatch") << '\n';
    } else {
        Table t{{"r", "s", "t", "a", "b", "c", "type"}, {}};
        for (const auto& [tr, f] : report.pairs) {
            t.add({tr.r, tr.s, tr.t, f.a, f.b, f.c, std::string(qforms::to_string(f.form_type()))});
        }
        write_table(out, t, format);
    }
    return report.ok() ? kExitOk : kExitMismatch;
}

// ------------------------------------------------------------------ cache

constexpr const char* kCacheHeader = "key,numerator,denominator";

int cache_save(const std::string& path, const Options& opt, std::ostream& out)
{
    if (opt.to) {
        if (*opt.to < 0) {
            throw UsageError("--to must be non-negative");
        }
        for (std::int64_t N = 0; N <= *opt.to; ++N) {
            qforms::hurwitz_direct(N);
            if (N > 0 && qforms::is_discriminant(-N)) {
                qforms::class_number_h(-N);
            }
        }
    }
    const auto snapshot = qforms::default_cache().snapshot();
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << kCacheHeader << "\r\n";
    for (const auto& [key, value] : snapshot) {
        file << key << ',' << value.numerator() << ',' << value.denominator() << "\r\n";
    }
    file.flush();
    if (!file) {
        throw IoError("write to '" + path + "' failed");
    }
    out << "saved " << snapshot.size() << " rows to " << path << '\n';
    return kExitOk;
}

struct CacheRow {
    std::int64_t key;
    Rat value;
};

// Structural validity of one row; empty string when fine.
std::string structural_problem(const CacheRow& row)
{
    if (row.key < 0) {
        if (!qforms::is_discriminant(row.key)) {
            return "key is not a discriminant";
        }
        if (row.value.denominator() != 1 || row.value.numerator() < 1) {
            return "class number must be a positive integer";
        }
        return {};
    }
    if (row.key == 0) {
        return row.value == Rat(-1, 12) ? "" : "H(0) must be -1/12";
    }
    const std::int64_t r = row.key % 4;
    if ((r == 1 || r == 2) != (row.value.numerator() == 0)) {
        return "value has the wrong vanishing pattern for its residue";
    }
    if (row.value.numerator() < 0 || 6 % row.value.denominator() != 0) {
        return "value is not a non-negative rational with denominator dividing 6";
    }
    return {};
}

int cache_load(const std::string& path, std::ostream& out, std::ostream& err)
{
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::vector<CacheRow> rows;
    std::string line;
    std::size_t line_no = 0;
    const auto fail = [&](std::size_t row, const std::string& why) {
        err << "cache load: row " << row << ": " << why << '\n';
        return kExitMismatch;
    };
    while (std::getline(file, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line_no++ == 0) {
            if (line != kCacheHeader) {
                return fail(0, "header must be '" + std::string(kCacheHeader) + "'");
            }
            continue;
        }
        const std::size_t row_no = line_no - 1;
        std::array<std::int64_t, 3> field{};
        std::size_t start = 0;
        for (int i = 0; i < 3; ++i) {
            const std::size_t comma = line.find(',', start);
            const bool last = (i == 2);
            if (last != (comma == std::string::npos)) {
                return fail(row_no, "expected 3 integer fields");
            }
            const auto v = parse_int(std::string_view(line).substr(start, last ? std::string::npos : comma - start));
            if (!v) {
                return fail(row_no, "expected 3 integer fields");
            }
            field[static_cast<std::size_t>(i)] = *v;
            start = comma + 1;
        }
        if (field[2] <= 0 || std::gcd(field[1], field[2]) != 1) {
            return fail(row_no, "fraction not in lowest terms with positive denominator");
        }
        CacheRow row{field[0], Rat(field[1], field[2])};
        if (const auto problem = structural_problem(row); !problem.empty()) {
            return fail(row_no, "key " + std::to_string(row.key) + ": " + problem);
        }
        if (!rows.empty() && row.key <= rows.back().key) {
            return fail(row_no, "keys must be strictly increasing");
        }
        rows.push_back(row);
    }
    if (file.bad()) {
        throw IoError("read of '" + path + "' failed");
    }
    if (line_no == 0) {
        return fail(0, "missing header");
    }
    // Recompute every hundredth row from scratch, starting with the first.
    std::size_t spot = 0;
    for (std::size_t i = 0; i < rows.size(); i += 100) {
        const CacheRow& row = rows[i];
        const Rat fresh = row.key < 0 ? Rat(qforms::class_number_h_uncached(row.key))
                                      : qforms::hurwitz_direct_uncached(row.key);
        if (fresh != row.value) {
            return fail(i + 1, "key " + std::to_string(row.key) + " stores " + to_string(row.value) +
                                   " but recomputation gives " + to_string(fresh));
        }
        ++spot;
    }
    auto& cache = qforms::default_cache();
    for (const auto& row : rows) {
        if (row.key < 0) {
            cache.store_h(row.key, row.value.numerator());
        } else {
            cache.store_H(row.key, row.value);
        }
    }
    out << "loaded " << rows.size() << " rows from " << path << " (" << spot << " spot-checked)\n";
    return kExitOk;
}

std::string join_command(const std::vector<std::string>& args)
{
    std::string s;
    for (const auto& a : args) {
        s += (s.empty() ? "" : " ") + a;
    }
    return s;
}

} // namespace

Environment Environment::from_process()
{
    Environment env;
    if (const char* p = std::getenv(kPrecisionEnv)) {
        env.precision = p;
    }
    return env;
}

std::optional<std::pair<std::int64_t, std::int64_t>> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = parse_int(text);
        if (!v) {
            return std::nullopt;
        }
        return std::pair{*v, *v};
    }
    const auto a = parse_int(std::string_view(text).substr(0, dots));
    const auto b = parse_int(std::string_view(text).substr(dots + 2));
    if (!a || !b || *a > *b) {
        return std::nullopt;
    }
    return std::pair{*a, *b};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    return run(args, out, err, Environment::from_process());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env)
{
    CLI::App app{"Exact and certified-numeric checks for sums of three squares and related q-series", "sumsq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("sumsq ") + kVersion);

    Options opt;
    const auto add_format = [&](CLI::App* c) {
        c->add_option("--format", opt.format, "Output format: text, csv or json");
    };
    const auto add_jobs = [&](CLI::App* c) {
        c->add_option("--jobs", opt.jobs, "Worker threads for sweeps (0 = all cores)");
    };

    std::string verify_id;
    auto* verify = app.add_subcommand("verify", "Run an identity check over a range, order or sample battery");
    verify->add_option("identity", verify_id, "Identity id")->required();
    verify->add_option("--order", opt.order, "Series order for q-series identities");
    verify->add_option("--from", opt.from, "First n of a sweep");
    verify->add_option("--to", opt.to, "Last n of a sweep");
    verify->add_option("--samples", opt.samples, "Number of battery points");
    verify->add_option("--tolerance", opt.tolerance, "Relative tolerance for numeric checks");
    verify->add_option("--precision", opt.precision, "Decimal digits for numeric checks");
    verify->add_option("--seed", opt.seed, "Regenerate the numeric battery from this seed");
    add_format(verify);
    add_jobs(verify);

    std::string compute_fn;
    std::vector<std::string> compute_args;
    auto* compute = app.add_subcommand("compute", "Tabulate r3, r2, r4, N3, r3delta, h or H");
    compute->add_option("function", compute_fn, "Function tag")->required();
    compute->add_option("args", compute_args, "Integers or a..b ranges");
    add_format(compute);

    std::string forms_d;
    auto* forms = app.add_subcommand("forms", "List reduced forms of a negative discriminant");
    forms->add_option("D", forms_d, "Discriminant")->required();
    add_format(forms);

    std::string bij_n;
    auto* bij = app.add_subcommand("bijection", "Map ordered solutions of rs+rt+st=n to reduced forms");
    bij->add_option("n", bij_n, "Positive integer")->required();
    add_format(bij);

    std::string cache_action;
    std::string cache_path;
    auto* cache = app.add_subcommand("cache", "Save or load the class-number memo tables as CSV");
    cache->add_option("action", cache_action, "save or load")->required()->check(CLI::IsMember({"save", "load"}));
    cache->add_option("path", cache_path, "CSV file")->required();
    cache->add_option("--to", opt.to, "Fill h and H up to this bound before saving");

    const auto started = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (opt.precision && (*opt.precision < 10 || *opt.precision > 10000)) {
            throw UsageError("--precision must be in 10..10000");
        }
        const std::string command = join_command(args);
        if (*verify) {
            code = cmd_verify(verify_id, opt, env, command, out);
        } else if (*compute) {
            code = cmd_compute(compute_fn, compute_args, opt, out);
        } else if (*forms) {
            code = cmd_forms(forms_d, opt, out);
        } else if (*bij) {
            code = cmd_bijection(bij_n, opt, out);
        } else if (*cache) {
            code = cache_action == "save" ? cache_save(cache_path, opt, out) : cache_load(cache_path, out, err);
        }
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nrun 'sumsq --help' for usage\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    char buf[48];
    std::snprintf(buf, sizeof buf, "elapsed: %.3f s\n", seconds);
    err << buf;
    return code;
}

} // namespace sumsq::cli
