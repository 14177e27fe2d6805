#ifndef TORUSZETA_CLI_HPP
#define TORUSZETA_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "toruszeta/linalg_exact.hpp"
#include "toruszeta/polyring.hpp"
#include "toruszeta/zeta_core.hpp"

namespace toruszeta::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t row, std::size_t column)
        : std::runtime_error(message), row_(row), column_(column) {}
    /// 1-based; 0 when the error is not tied to a row or column.
    std::size_t row() const { return row_; }
    std::size_t column() const { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

/// Nested bracket list such as "[[2,1],[1,1]]"; whitespace allowed anywhere
/// between tokens, integers of any size with an optional sign.
IntMatrix parse_matrix(std::string_view text);
/// Inverse of parse_matrix, without whitespace.
std::string render_matrix(const IntMatrix& m);

enum class Style { Plain, Latex };

std::string render_poly(const IntPoly& p, Style style);
/// Numerator and denominator with the factors z, 1 - z and 1 + z pulled out.
std::string render_ratfunc(const RatFunc& f, Style style);

enum class Command { Zeta, Lefschetz, Counts, Exponents, Classify, Check, Report };
enum class Format { Plain, Latex, Json };

std::optional<Command> command_from_string(std::string_view name);
std::optional<Format> format_from_string(std::string_view name);

struct CliConfig {
    Command command = Command::Report;
    std::optional<std::string> matrix_text;
    std::optional<std::string> matrix_file;
    std::size_t max_m = 10;
    Format format = Format::Plain;
    double tolerance = kDefaultTolerance;
    bool unreduced = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs one command, writing results to `out` and diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

nlohmann::json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const ZetaReport& report);
ZetaReport report_from_json(const nlohmann::json& j);

}  // namespace toruszeta::cli

#endif  // TORUSZETA_CLI_HPP
