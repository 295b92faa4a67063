#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kummer/bounds.hpp"
#include "kummer/char2.hpp"
#include "kummer/curve.hpp"
#include "kummer/oracles.hpp"
#include "kummer/search.hpp"

namespace kummer {

/// Syntax error in the polynomial grammar; byte_offset points at the
/// offending input byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t byte_offset);
    std::size_t byte_offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Parses expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := base ('^' uint)?; base := uint | 'x' | '(' expr ')'.
/// Integer literals are reduced mod p; whitespace is ignored.
Polynomial parse_poly(const std::string& text, const FieldPtr& field);

/// Everything cmd_analyze reports for one curve. Serialization is stable:
/// fixed key order, field elements as integers (k = 1) or coordinate arrays.
struct InvariantReport {
    std::uint64_t p = 0;
    unsigned k = 1;
    unsigned n = 0;
    std::string f_text;

    RamificationProfile profile;
    OrbitDecomposition orbit_decomposition;
    HasseWitt hasse_witt;
    SemilinearInvariants inv;
    BoundsReport bounds;

    long long oracle_rh_genus = 0;
    bool oracle_rh_match = false;
    std::size_t oracle_stable_rank = 0;
    std::size_t oracle_stable_index = 0;
    bool oracle_stable_match = false;

    std::string reduced_f_text;  // differs from f_text when n-th powers were absorbed

    std::string to_json() const;  // single JSON object, fixed key order
    std::string to_text() const;
};

InvariantReport analyze_curve(const FieldPtr& field, unsigned n, const std::string& f_text);

struct Char2Report {
    unsigned k = 1;
    unsigned g = 0;
    std::string q_text;
    std::string p_text;
    TwistedMatrix matrix;
    SemilinearInvariants inv;

    std::string to_json() const;
    std::string to_text() const;
};

Char2Report analyze_char2(const FieldPtr& field, unsigned g, const std::string& q_text,
                          const std::string& p_text);

struct BoundsCmdReport {
    std::uint64_t p = 0;
    unsigned k = 1;
    unsigned n = 0;
    std::string f_text;
    RamificationProfile profile;
    OrbitDecomposition orbit_decomposition;
    BoundsReport bounds;

    std::string to_json() const;
    std::string to_text() const;
};

BoundsCmdReport bounds_for_curve(const FieldPtr& field, unsigned n, const std::string& f_text);

}  // namespace kummer
