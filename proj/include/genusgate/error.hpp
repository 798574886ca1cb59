#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace genusgate {

enum class errc {
    invalid_argument,
    out_of_range,
    non_squarefree,
    not_totally_real,
    disc_mismatch,
    not_monic,
    bad_override,
    needs_override,
    enumeration_cap,
    malformed_line,
    duplicate_field,
    zeta_out_of_bounds,
    zagier_mismatch,
    undecided_comparison,
    io,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::out_of_range: return "OutOfRange";
    case errc::non_squarefree: return "NonSquarefree";
    case errc::not_totally_real: return "NotTotallyReal";
    case errc::disc_mismatch: return "DiscMismatch";
    case errc::not_monic: return "NotMonic";
    case errc::bad_override: return "BadOverride";
    case errc::needs_override: return "NeedsOverride";
    case errc::enumeration_cap: return "EnumerationCap";
    case errc::malformed_line: return "MalformedLine";
    case errc::duplicate_field: return "DuplicateField";
    case errc::zeta_out_of_bounds: return "ZetaOutOfBounds";
    case errc::zagier_mismatch: return "ZagierMismatch";
    case errc::undecided_comparison: return "UndecidedComparison";
    case errc::io: return "IoError";
    }
    return "Unknown";
}

/// Every failure in the library is one of these; `code()` names the error kind.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Raised when the Dedekind criterion fails at `prime` and no splitting override exists.
class needs_override : public error {
public:
    explicit needs_override(std::uint64_t prime)
        : error(errc::needs_override, "no splitting data for p = " + std::to_string(prime)),
          prime_(prime) {}

    std::uint64_t prime() const noexcept { return prime_; }

private:
    std::uint64_t prime_;
};

/// Raised by the field-table parser; carries the 1-based line number.
class malformed_line : public error {
public:
    malformed_line(std::size_t lineno, const std::string& reason)
        : error(errc::malformed_line, "line " + std::to_string(lineno) + ": " + reason),
          lineno_(lineno) {}

    std::size_t lineno() const noexcept { return lineno_; }

private:
    std::size_t lineno_;
};

} // namespace genusgate
