#include "toruszeta/cli.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "toruszeta/oracle.hpp"

namespace toruszeta::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Matrix text format

namespace {

class MatrixParser {
public:
    explicit MatrixParser(std::string_view text) : text_(text) {}

    std::vector<std::vector<Integer>> parse() {
        std::vector<std::vector<Integer>> rows;
        skip_ws();
        expect('[');
        skip_ws();
        if (peek(']')) {
            throw ParseError("empty matrix", 0, 0);
        }
        while (true) {
            rows.push_back(parse_row(rows.size() + 1));
            skip_ws();
            if (peek(',')) {
                ++pos_;
                continue;
            }
            if (peek(']')) {
                ++pos_;
                break;
            }
            fail("expected ',' or ']' after row " + std::to_string(rows.size()), rows.size(), 0);
        }
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing characters", 0, 0);
        }
        return rows;
    }

private:
    std::vector<Integer> parse_row(std::size_t row) {
        skip_ws();
        if (!peek('[')) {
            fail("expected '[' to open row " + std::to_string(row), row, 0);
        }
        ++pos_;
        std::vector<Integer> entries;
        skip_ws();
        if (peek(']')) {
            ++pos_;
            return entries;
        }
        while (true) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' &&
                   text_[pos_] != '[' && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            const std::string token(text_.substr(start, pos_ - start));
            entries.push_back(parse_integer(token, row, entries.size() + 1));
            skip_ws();
            if (peek(',')) {
                ++pos_;
                continue;
            }
            if (peek(']')) {
                ++pos_;
                return entries;
            }
            fail("expected ',' or ']' in row " + std::to_string(row), row, entries.size());
        }
    }

    static Integer parse_integer(const std::string& token, std::size_t row, std::size_t column) {
        std::size_t i = 0;
        if (!token.empty() && (token[0] == '+' || token[0] == '-')) {
            i = 1;
        }
        bool ok = i < token.size();
        for (std::size_t j = i; j < token.size(); ++j) {
            ok = ok && std::isdigit(static_cast<unsigned char>(token[j]));
        }
        if (!ok) {
            throw ParseError("non-integer token '" + token + "' at row " + std::to_string(row) +
                                 ", column " + std::to_string(column),
                             row, column);
        }
        const std::string digits = token[0] == '+' ? token.substr(1) : token;
        return Integer(digits, 10);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void expect(char c) {
        if (!peek(c)) {
            fail(std::string("expected '") + c + "' at offset " + std::to_string(pos_), 0, 0);
        }
        ++pos_;
    }

    [[noreturn]] static void fail(const std::string& message, std::size_t row, std::size_t column) {
        throw ParseError(message, row, column);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
    const auto rows = MatrixParser(text).parse();
    const std::size_t width = rows.front().size();
    if (width == 0) {
        throw ParseError("empty matrix", 1, 0);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != width) {
            throw ParseError("ragged row " + std::to_string(i + 1), i + 1, 0);
        }
    }
    if (rows.size() != width) {
        throw ParseError("non-square matrix: " + std::to_string(rows.size()) + " rows of length " +
                             std::to_string(width),
                         0, 0);
    }
    return IntMatrix::from_rows(rows);
}

std::string render_matrix(const IntMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out += i == 0 ? "[" : ",[";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j > 0) {
                out += ',';
            }
            out += m(i, j).get_str();
        }
        out += ']';
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// Formula rendering

namespace {

std::string power_suffix(unsigned long e, Style style) {
    if (e == 1) {
        return "";
    }
    return style == Style::Latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
}

std::string signed_exponent(long e, Style style) {
    return style == Style::Latex ? "^{" + std::to_string(e) + "}" : "^(" + std::to_string(e) + ")";
}

// Factored display of one side of a fraction.
std::string render_factored(const IntPoly& p, Style style) {
    if (p.is_zero()) {
        return "0";
    }
    IntPoly rest = p;
    std::size_t z_power = 0;
    while (rest.coeff(0) == 0) {
        rest = divide_exact(rest, IntPoly{0, 1});
        ++z_power;
    }
    const unsigned minus = multiplicity_at(rest, 1);
    for (unsigned i = 0; i < minus; ++i) {
        rest = divide_exact(rest, IntPoly{1, -1});
    }
    const unsigned plus = multiplicity_at(rest, -1);
    for (unsigned i = 0; i < plus; ++i) {
        rest = divide_exact(rest, IntPoly{1, 1});
    }

    std::vector<std::string> factors;
    if (z_power > 0) {
        factors.push_back("z" + power_suffix(z_power, style));
    }
    if (minus > 0) {
        factors.push_back("(1 - z)" + power_suffix(minus, style));
    }
    if (plus > 0) {
        factors.push_back("(1 + z)" + power_suffix(plus, style));
    }
    Integer scalar = 1;
    if (rest.degree() == 0) {
        scalar = rest.coeff(0);
    } else if (style == Style::Latex && factors.empty()) {
        // \frac already groups a lone factor
        return render_poly(rest, style);
    } else {
        factors.push_back("(" + render_poly(rest, style) + ")");
    }
    if (factors.empty()) {
        return scalar.get_str();
    }
    std::string out;
    if (scalar == -1) {
        out = "-";
    } else if (scalar != 1) {
        out = scalar.get_str() + " ";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        out += (i == 0 ? "" : " ") + factors[i];
    }
    return out;
}

}  // namespace

std::string render_poly(const IntPoly& p, Style style) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Integer& c = p.coeffs()[k];
        if (c == 0) {
            continue;
        }
        if (first) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        const Integer magnitude = abs(c);
        if (k == 0) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1) {
            out += magnitude.get_str() + " ";
        }
        out += "z" + power_suffix(k, style);
    }
    return out;
}

std::string render_ratfunc(const RatFunc& f, Style style) {
    const std::string num = render_factored(f.num(), style);
    if (f.den() == IntPoly{1}) {
        return num;
    }
    const std::string den = render_factored(f.den(), style);
    if (style == Style::Latex) {
        return "\\frac{" + num + "}{" + den + "}";
    }
    return num + " / " + den;
}

std::optional<Command> command_from_string(std::string_view name) {
    if (name == "zeta") return Command::Zeta;
    if (name == "lefschetz") return Command::Lefschetz;
    if (name == "counts") return Command::Counts;
    if (name == "exponents") return Command::Exponents;
    if (name == "classify") return Command::Classify;
    if (name == "check") return Command::Check;
    if (name == "report") return Command::Report;
    return std::nullopt;
}

std::optional<Format> format_from_string(std::string_view name) {
    if (name == "plain") return Format::Plain;
    if (name == "latex") return Format::Latex;
    if (name == "json") return Format::Json;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Structured output

namespace {

json integers_to_json(const std::vector<Integer>& values) {
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(v.get_str());
    }
    return out;
}

std::vector<Integer> integers_from_json(const json& j) {
    std::vector<Integer> out;
    for (const auto& v : j) {
        out.emplace_back(v.get<std::string>(), 10);
    }
    return out;
}

std::string evidence_name(Evidence e) {
    switch (e) {
        case Evidence::Exact: return "exact";
        case Evidence::Numeric: return "numeric";
        case Evidence::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

Evidence evidence_from_name(const std::string& name) {
    if (name == "exact") return Evidence::Exact;
    if (name == "numeric") return Evidence::Numeric;
    if (name == "indeterminate") return Evidence::Indeterminate;
    throw std::invalid_argument("unknown hyperbolic_evidence '" + name + "'");
}

json signs_to_json(const SignData& s) {
    return {{"sigma", s.sigma}, {"tau", s.tau}, {"delta", s.delta}, {"epsilon", s.epsilon}};
}

json classification_to_json(const ClassificationReport& c) {
    json out;
    out["singular"] = c.singular;
    out["root_of_unity_orders"] = c.root_of_unity_orders;
    out["quasihyperbolic"] = c.quasihyperbolic;
    out["hyperbolic"] = c.hyperbolic ? json(*c.hyperbolic) : json(nullptr);
    out["hyperbolic_evidence"] = evidence_name(c.hyperbolic_evidence);
    return out;
}

json growth_to_json(const std::optional<ApproxReal>& g) {
    if (!g) {
        return nullptr;
    }
    return {{"value", g->value}, {"error", g->error_bound}};
}

}  // namespace

json ratfunc_to_json(const RatFunc& f) {
    return {{"num", integers_to_json(f.num().coeffs())}, {"den", integers_to_json(f.den().coeffs())}};
}

RatFunc ratfunc_from_json(const json& j) {
    return make_ratfunc(IntPoly(integers_from_json(j.at("num"))), IntPoly(integers_from_json(j.at("den"))));
}

json report_to_json(const ZetaReport& report) {
    json out;
    json rows = json::array();
    for (const auto& row : report.matrix.rows()) {
        rows.push_back(integers_to_json(row));
    }
    out["matrix"] = rows;
    out["artin_mazur_zeta"] = ratfunc_to_json(report.artin_mazur_zeta);
    out["lefschetz_zeta"] = ratfunc_to_json(report.lefschetz_zeta);
    out["signs"] = signs_to_json(report.signs);
    out["counts"] = integers_to_json(report.counts);
    out["signed_counts"] = integers_to_json(report.signed_counts);
    out["exponents"] = integers_to_json(report.exponents);
    out["classification"] = classification_to_json(report.classification);
    out["functional_equation"] =
        report.functional_equation_holds ? json(*report.functional_equation_holds) : json(nullptr);
    out["growth_rate"] = growth_to_json(report.growth_rate);
    return out;
}

ZetaReport report_from_json(const json& j) {
    ZetaReport r;
    std::vector<std::vector<Integer>> rows;
    for (const auto& row : j.at("matrix")) {
        rows.push_back(integers_from_json(row));
    }
    r.matrix = IntMatrix::from_rows(rows);
    r.artin_mazur_zeta = ratfunc_from_json(j.at("artin_mazur_zeta"));
    r.lefschetz_zeta = ratfunc_from_json(j.at("lefschetz_zeta"));
    const auto& s = j.at("signs");
    r.signs = SignData{s.at("sigma").get<unsigned>(), s.at("tau").get<unsigned>(),
                       s.at("delta").get<int>(), s.at("epsilon").get<int>()};
    r.counts = integers_from_json(j.at("counts"));
    r.signed_counts = integers_from_json(j.at("signed_counts"));
    r.exponents = integers_from_json(j.at("exponents"));
    const auto& c = j.at("classification");
    r.classification.singular = c.at("singular").get<bool>();
    r.classification.root_of_unity_orders = c.at("root_of_unity_orders").get<std::vector<unsigned>>();
    r.classification.quasihyperbolic = c.at("quasihyperbolic").get<bool>();
    if (!c.at("hyperbolic").is_null()) {
        r.classification.hyperbolic = c.at("hyperbolic").get<bool>();
    }
    r.classification.hyperbolic_evidence = evidence_from_name(c.at("hyperbolic_evidence").get<std::string>());
    if (!j.at("functional_equation").is_null()) {
        r.functional_equation_holds = j.at("functional_equation").get<bool>();
    }
    if (!j.at("growth_rate").is_null()) {
        const auto& g = j.at("growth_rate");
        r.growth_rate = ApproxReal{g.at("value").get<double>(), g.at("error").get<double>()};
    }
    return r;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

enum class Status { Pass, Fail, Skip };

struct CheckOutcome {
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

struct Unreduced {
    std::size_t k;
    IntPoly factor;
    long exponent;
};

// Factor-by-factor product; for the Artin-Mazur zeta the signs are applied.
std::vector<Unreduced> unreduced_factors(const IntMatrix& m, bool artin_mazur) {
    const SignData s = artin_mazur ? signs(m) : SignData{};
    const CharFactors cf = char_factors(m);
    std::vector<Unreduced> out;
    for (std::size_t k = 0; k < cf.factors.size(); ++k) {
        const long base = k % 2 == 0 ? -1 : 1;
        IntPoly factor = s.delta == 1 ? cf.factors[k] : reflect(cf.factors[k]);
        out.push_back({k, std::move(factor), base * s.epsilon});
    }
    return out;
}

std::string render_unreduced(const std::vector<Unreduced>& factors, Style style) {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (style == Style::Latex) {
            out += (i == 0 ? "" : " ") + std::string("\\left(") + render_poly(factors[i].factor, style) +
                   "\\right)" + signed_exponent(factors[i].exponent, style);
        } else {
            out += (i == 0 ? "" : " * ") + std::string("(") + render_poly(factors[i].factor, style) + ")" +
                   signed_exponent(factors[i].exponent, style);
        }
    }
    return out;
}

json unreduced_to_json(const std::vector<Unreduced>& factors) {
    json out = json::array();
    for (const auto& f : factors) {
        out.push_back({{"k", f.k}, {"factor", integers_to_json(f.factor.coeffs())}, {"exponent", f.exponent}});
    }
    return out;
}

std::string sign_char(int s) { return s > 0 ? "+1" : "-1"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string hyperbolic_text(const ClassificationReport& c) {
    if (!c.hyperbolic) {
        return "indeterminate";
    }
    return yes_no(*c.hyperbolic) + " (" + evidence_name(c.hyperbolic_evidence) + ")";
}

std::string orders_text(const std::vector<unsigned>& orders) {
    std::string out = "{";
    for (std::size_t i = 0; i < orders.size(); ++i) {
        out += (i == 0 ? "" : ", ") + std::to_string(orders[i]);
    }
    return out + "}";
}

std::string format_double(double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

std::string format_error(double x) {
    std::ostringstream s;
    s << std::setprecision(3) << x;
    return s.str();
}

void print_classification(const ClassificationReport& c, std::ostream& out) {
    out << "singular: " << yes_no(c.singular) << '\n';
    out << "root_of_unity_orders: " << orders_text(c.root_of_unity_orders) << '\n';
    out << "quasihyperbolic: " << yes_no(c.quasihyperbolic) << '\n';
    out << "hyperbolic: " << hyperbolic_text(c) << '\n';
}

void print_table(const std::vector<std::vector<Integer>>& columns, Format format, std::ostream& out,
                 const std::vector<std::string>& latex_header) {
    const std::size_t rows = columns.front().size();
    if (format == Format::Latex) {
        out << "\\begin{tabular}{" << std::string(latex_header.size(), 'r') << "}\n";
        for (std::size_t i = 0; i < latex_header.size(); ++i) {
            out << (i == 0 ? "" : " & ") << latex_header[i];
        }
        out << " \\\\\n\\hline\n";
        for (std::size_t r = 0; r < rows; ++r) {
            out << r + 1;
            for (const auto& col : columns) {
                out << " & " << col[r].get_str();
            }
            out << " \\\\\n";
        }
        out << "\\end{tabular}\n";
        return;
    }
    for (std::size_t r = 0; r < rows; ++r) {
        out << '(' << r + 1;
        for (const auto& col : columns) {
            out << ',' << col[r].get_str();
        }
        out << ")\n";
    }
}

Integer alternating_trace_sum(const IntMatrix& a) {
    Integer acc = 0;
    for (std::size_t k = 0; k <= a.dim(); ++k) {
        const Integer t = trace(exterior_power(a, k));
        acc += k % 2 == 0 ? t : Integer(-t);
    }
    return acc;
}

std::vector<CheckOutcome> run_checks(const IntMatrix& m, std::size_t max_m) {
    std::vector<CheckOutcome> results;
    auto record = [&](const std::string& name, const std::function<CheckOutcome()>& body) {
        try {
            CheckOutcome c = body();
            c.name = name;
            results.push_back(std::move(c));
        } catch (const std::exception& e) {
            results.push_back({name, Status::Fail, std::string("exception: ") + e.what()});
        }
    };
    auto pass = [] { return CheckOutcome{"", Status::Pass, ""}; };
    auto fail = [](std::string detail) { return CheckOutcome{"", Status::Fail, std::move(detail)}; };

    const RatFunc zeta = artin_mazur_zeta(m);

    record("functional equation", [&] {
        if (det_exact(m) == 0) {
            return CheckOutcome{"", Status::Skip, "functional equation skipped (det = 0)"};
        }
        const auto fe = functional_equation_check(m);
        if (!fe.lefschetz_holds) return fail("Lefschetz zeta identity does not hold");
        if (!fe.artin_mazur_holds) return fail("Artin-Mazur zeta identity does not hold");
        return pass();
    });

    record("snf fixed-point count", [&] {
        for (std::size_t k = 1; k <= max_m; ++k) {
            const Integer a = isolated_fixed_count(m, k);
            const Integer b = oracle::snf_fixed_count(m, k);
            if (a != b) {
                return fail("m = " + std::to_string(k) + ": determinant " + a.get_str() + ", smith form " +
                            b.get_str());
            }
        }
        return pass();
    });

    record("fixed-point enumeration", [&] {
        std::size_t enumerated = 0;
        for (std::size_t k = 1; k <= max_m; ++k) {
            const Integer expected = isolated_fixed_count(m, k);
            if (expected > oracle::kEnumerationLimit) {
                continue;
            }
            const auto set = oracle::enumerate_fixed_points(m, k);
            ++enumerated;
            if (set.finite != (expected != 0)) {
                return fail("m = " + std::to_string(k) + ": finiteness disagrees with the count");
            }
            if (set.finite && Integer(static_cast<unsigned long>(set.points.size())) != expected) {
                return fail("m = " + std::to_string(k) + ": enumerated " + std::to_string(set.points.size()) +
                            " points, expected " + expected.get_str());
            }
        }
        if (enumerated == 0) {
            return CheckOutcome{"", Status::Skip, "all counts exceed the enumeration limit"};
        }
        return pass();
    });

    record("exp-sum series", [&] {
        if (oracle::exp_sum_zeta_series(m, max_m) != series_expand(zeta, max_m)) {
            return fail("series of the rational zeta differs from exp(sum a_m z^m / m)");
        }
        return pass();
    });

    record("sturm sign oracle", [&] {
        const SignData s = signs(m);
        const auto o = oracle::sturm_sign_oracle(m);
        if (s.delta != o.delta || s.epsilon != o.epsilon) {
            return fail("signs (" + sign_char(s.delta) + ", " + sign_char(s.epsilon) + "), oracle (" +
                        sign_char(o.delta) + ", " + sign_char(o.epsilon) + ")");
        }
        return pass();
    });

    record("generating function series", [&] {
        const auto series = series_expand(generating_function(m), max_m);
        if (series[0] != 0) return fail("nonzero constant term");
        for (std::size_t k = 1; k <= max_m; ++k) {
            if (series[k] != Rational(isolated_fixed_count(m, k))) {
                return fail("coefficient " + std::to_string(k) + " is " + series[k].get_str());
            }
        }
        return pass();
    });

    record("lefschetz series", [&] {
        const auto series = series_expand(log_derivative(lefschetz_zeta(m)), max_m);
        for (std::size_t k = 1; k <= max_m; ++k) {
            if (series[k] != Rational(signed_count(m, k))) {
                return fail("coefficient " + std::to_string(k) + " is " + series[k].get_str());
            }
        }
        return pass();
    });

    record("trace identity", [&] {
        for (std::size_t k = 1; k <= std::min<std::size_t>(max_m, 4); ++k) {
            if (alternating_trace_sum(mat_pow(m, k)) != signed_count(m, k)) {
                return fail("m = " + std::to_string(k));
            }
        }
        return pass();
    });

    record("euler product", [&] {
        const auto exponents = euler_exponents(m, max_m);
        const auto product = oracle::euler_product_series(exponents, max_m);
        const auto series = series_expand(zeta, max_m);
        for (std::size_t k = 0; k <= max_m; ++k) {
            if (Rational(product[k]) != series[k]) {
                return fail("coefficient " + std::to_string(k) + " differs");
            }
        }
        return pass();
    });

    record("product form", [&] {
        if (artin_mazur_zeta_product(m) != zeta) {
            return fail("factor-by-factor product differs from the reduced zeta");
        }
        return pass();
    });
    return results;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skip: return "SKIP";
    }
    return "FAIL";
}

int run_check(const IntMatrix& m, const CliConfig& config, std::ostream& out) {
    const auto results = run_checks(m, config.max_m);
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const auto& r : results) {
        failed += r.status == Status::Fail;
        skipped += r.status == Status::Skip;
    }
    if (config.format == Format::Json) {
        json checks = json::array();
        for (const auto& r : results) {
            std::string status = status_name(r.status);
            for (auto& ch : status) {
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            }
            checks.push_back({{"name", r.name}, {"status", status}, {"detail", r.detail}});
        }
        out << json{{"checks", checks}, {"passed", failed == 0}}.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            out << status_name(r.status) << ' ' << r.name;
            if (!r.detail.empty()) {
                out << ": " << r.detail;
            }
            out << '\n';
        }
        out << "checks: " << results.size() - failed - skipped << " passed, " << failed << " failed, "
            << skipped << " skipped\n";
    }
    return failed == 0 ? kExitOk : kExitCheckFailed;
}

void run_report(const IntMatrix& m, const CliConfig& config, std::ostream& out) {
    const ZetaReport report = make_report(m, config.max_m, config.tolerance);
    if (config.format == Format::Json) {
        json j = report_to_json(report);
        if (config.unreduced) {
            j["unreduced_artin_mazur_zeta"] = unreduced_to_json(unreduced_factors(m, true));
            j["unreduced_lefschetz_zeta"] = unreduced_to_json(unreduced_factors(m, false));
        }
        out << j.dump(2) << '\n';
        return;
    }
    const Style style = config.format == Format::Latex ? Style::Latex : Style::Plain;
    out << "matrix: " << render_matrix(m) << '\n';
    out << "lefschetz_zeta: " << render_ratfunc(report.lefschetz_zeta, style) << '\n';
    out << "artin_mazur_zeta: " << render_ratfunc(report.artin_mazur_zeta, style) << '\n';
    if (config.unreduced) {
        out << "lefschetz_zeta (unreduced): " << render_unreduced(unreduced_factors(m, false), style) << '\n';
        out << "artin_mazur_zeta (unreduced): " << render_unreduced(unreduced_factors(m, true), style) << '\n';
    }
    const SignData& s = report.signs;
    out << "signs: sigma=" << s.sigma << " tau=" << s.tau << " delta=" << sign_char(s.delta)
        << " epsilon=" << sign_char(s.epsilon) << '\n';
    out << "(m,signed_count,count,exponent)\n";
    print_table({report.signed_counts, report.counts, report.exponents}, Format::Plain, out, {});
    print_classification(report.classification, out);
    out << "functional_equation: ";
    if (!report.functional_equation_holds) {
        out << "skipped (det = 0)\n";
    } else {
        out << (*report.functional_equation_holds ? "holds" : "fails") << '\n';
    }
    out << "growth_rate: ";
    if (report.growth_rate) {
        out << format_double(report.growth_rate->value) << " +- " << format_error(report.growth_rate->error_bound)
            << '\n';
    } else {
        out << "none\n";
    }
}

int dispatch(const IntMatrix& m, const CliConfig& config, std::ostream& out) {
    const Style style = config.format == Format::Latex ? Style::Latex : Style::Plain;
    const bool as_json = config.format == Format::Json;
    switch (config.command) {
        case Command::Zeta:
        case Command::Lefschetz: {
            const bool am = config.command == Command::Zeta;
            const RatFunc f = am ? artin_mazur_zeta(m) : lefschetz_zeta(m);
            const char* key = am ? "artin_mazur_zeta" : "lefschetz_zeta";
            if (as_json) {
                json j{{key, ratfunc_to_json(f)}};
                if (config.unreduced) {
                    j["unreduced"] = unreduced_to_json(unreduced_factors(m, am));
                }
                out << j.dump(2) << '\n';
            } else if (config.unreduced) {
                out << render_unreduced(unreduced_factors(m, am), style) << '\n';
            } else {
                out << render_ratfunc(f, style) << '\n';
            }
            return kExitOk;
        }
        case Command::Counts: {
            std::vector<Integer> signed_counts;
            std::vector<Integer> counts;
            for (std::size_t k = 1; k <= config.max_m; ++k) {
                signed_counts.push_back(signed_count(m, k));
                counts.push_back(abs(signed_counts.back()));
            }
            if (as_json) {
                out << json{{"signed_counts", integers_to_json(signed_counts)}, {"counts", integers_to_json(counts)}}
                           .dump(2)
                    << '\n';
            } else {
                print_table({signed_counts, counts}, config.format, out, {"$m$", "$\\tilde a_m$", "$a_m$"});
            }
            return kExitOk;
        }
        case Command::Exponents: {
            const auto exponents = euler_exponents(m, config.max_m);
            if (as_json) {
                out << json{{"exponents", integers_to_json(exponents)}}.dump(2) << '\n';
            } else {
                print_table({exponents}, config.format, out, {"$m$", "$c_m$"});
            }
            return kExitOk;
        }
        case Command::Classify: {
            const auto c = classify(m, config.tolerance);
            if (as_json) {
                out << json{{"classification", classification_to_json(c)}}.dump(2) << '\n';
            } else {
                print_classification(c, out);
            }
            return kExitOk;
        }
        case Command::Check:
            return run_check(m, config, out);
        case Command::Report:
            run_report(m, config, out);
            return kExitOk;
    }
    return kExitInputError;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    if (config.matrix_text.has_value() == config.matrix_file.has_value()) {
        err << "error: exactly one of --matrix or --file is required\n";
        return kExitInputError;
    }
    if (config.max_m < 1) {
        err << "error: --max-m must be at least 1\n";
        return kExitInputError;
    }
    if (!(config.tolerance > 0)) {
        err << "error: --tolerance must be positive\n";
        return kExitInputError;
    }
    std::string text;
    if (config.matrix_text) {
        text = *config.matrix_text;
    } else {
        std::ifstream in(*config.matrix_file);
        if (!in) {
            err << "error: cannot read matrix file '" << *config.matrix_file << "'\n";
            return kExitInputError;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    IntMatrix m(1);
    try {
        m = parse_matrix(text);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    try {
        return dispatch(m, config, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace toruszeta::cli
