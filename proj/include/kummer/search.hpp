#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "kummer/bounds.hpp"
#include "kummer/char2.hpp"
#include "kummer/curve.hpp"

namespace kummer {

/// Search space cardinality exceeds the configured cap.
class SpaceTooLarge : public std::runtime_error {
public:
    SpaceTooLarge(std::uint64_t cardinality, std::uint64_t cap);
    std::uint64_t cardinality() const noexcept { return cardinality_; }

private:
    std::uint64_t cardinality_;
};

struct SearchSpec {
    enum class Family { Kummer, Char2 };
    enum class Filter { None, Superspecial, ANumber, PRank };

    std::uint64_t p = 5;
    unsigned ext = 1;
    Family family = Family::Kummer;

    // Kummer family: y^n = f with deg f = degree.
    unsigned n = 2;
    unsigned degree = 3;
    bool monic = true;       // leading coefficient fixed to 1
    bool depressed = false;  // second-highest coefficient fixed to 0
    bool squarefree_only = false;

    // Char2 family: y^2 + Qy = P at this genus (deg Q <= g, deg P = 2g+1).
    unsigned genus = 1;

    Filter filter = Filter::None;
    long long filter_value = 0;

    std::uint64_t max_space = 200'000'000;  // error above this cardinality
    std::size_t witness_cap = 32;
    unsigned threads = 1;
};

struct CensusRow {
    long long genus = 0;
    long long a_number = 0;
    long long p_rank = 0;
    std::uint64_t count = 0;
};

/// Aggregated result of an exhaustive enumeration. Enumeration order is the
/// lexicographic order of coefficient tuples (constant coordinate most
/// significant), so identical specs yield identical tables byte for byte.
struct CensusTable {
    std::vector<CensusRow> rows;          // sorted by (genus, a_number, p_rank)
    std::vector<std::string> witnesses;   // filter matches, up to witness_cap
    std::uint64_t space = 0;              // tuple-space cardinality
    std::uint64_t valid = 0;              // tuples that validated as curves
    std::uint64_t skipped_invalid = 0;    // failed validation
    std::uint64_t skipped_nonsquarefree = 0;
};

CensusTable enumerate(const SearchSpec& spec);

/// CSV with header genus,a_number,p_rank,count.
std::string census_csv(const CensusTable& table);

/// Exhaustive char-2 sweep at one genus, structured Q-major: the Frobenius
/// matrix depends only on Q, so matrix invariants are computed once per Q
/// and P enters only through the admissibility search.
struct Char2SweepReport {
    std::uint64_t q_space = 0;                 // all Q with deg <= g
    std::uint64_t q_admissible = 0;            // Q admitting at least one P
    std::uint64_t nilpotent_admissible = 0;
    std::uint64_t nonconstant_nilpotent = 0;   // admissible ones; expected 0
    bool a_number_formula_ok = true;           // a = floor((g+1)/2) on nilpotent Q
    std::uint64_t superspecial_q = 0;          // admissible Q with zero matrix
    std::uint64_t superspecial_pairs = 0;      // admissible (Q, P) with zero matrix
    bool nilpotent_implies_constant = true;
};

Char2SweepReport char2_sweep(const FieldPtr& field, unsigned g);

struct CampaignSubcheck {
    std::string name;
    bool pass = false;
    std::uint64_t checked = 0;
    std::string note;
};

/// Superspecial genus-4 elimination in characteristic 11, over F_11-rational
/// models y^2 = a_1 x + ... + a_9 x^9 with a_1, a_9 != 0:
///   (a) under the coefficient relations, b_7..b_10 of f^5 vanish for all
///       110 (a_1, a_2) pairs and random (a_7, a_8, a_9);
///   (b) the closed-form b_18 expression matches direct expansion on random
///       tuples;
///   (c) exhaustive sweep with a_1 = 1: no (a_2..a_8, a_9 != 0) makes
///       b_j = 0 for all j in {7,8,9,10,18,19,20,21}.
struct CampaignReport {
    CampaignSubcheck relation_check;  // (a)
    CampaignSubcheck b18_check;       // (b)
    CampaignSubcheck sweep;           // (c)
    std::uint64_t sweep_space = 0;
    std::uint64_t sweep_full_expansions = 0;
    std::vector<std::string> counterexamples;
    bool all_pass = false;
    std::string scope_note;
};

CampaignReport genus4_char11_campaign(std::uint64_t b18_samples = 1000, std::uint64_t seed = 0x5eed);

std::string campaign_text(const CampaignReport& report);

}  // namespace kummer
