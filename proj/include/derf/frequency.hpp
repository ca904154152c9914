#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "derf/basis.hpp"

namespace derf {

enum class Tier { overline_R, diamond_R, overline_phi, diamond_phi };
enum class Role { none, passive, active };

inline bool is_R(Tier t) { return t == Tier::overline_R || t == Tier::diamond_R; }
inline bool is_overline(Tier t) { return t == Tier::overline_R || t == Tier::overline_phi; }

// One conjugate pair of waves (the sigma=+1 representative); the sigma=-1
// partner is implied by conjugation.
struct WaveClass {
    Tier tier;
    int dir = 0;              // index into the tier's direction set
    Role role = Role::none;   // active/passive for phi tiers
};

// index family per slot parity; parity 0 serves even time slots
struct FamilySpec {
    std::array<std::vector<WaveClass>, 2> classes;

    static FamilySpec full();          // 3+3 R dirs and both phi chains per parity
    static FamilySpec desk64();        // what a 64^3 grid supports (see decision log)
    static FamilySpec phi_chain_only();

    int count(int parity) const { return int(classes[parity].size()); }
};

// Integer frequency table: signed base value n for the sigma=+1 wave of each
// class; conjugates use -n.  Chain actives are forced to -2 * (their passive).
struct FrequencyTable {
    std::array<std::vector<int>, 2> n_signed;
    int n_max() const;
};

struct FrequencyConstraints {
    int pair_margin = 8; // |n + n'| >= this unless n' == -n   (includes n' == n)
    int trio_margin = 4; // |n1+n2+n3| >= this unless a designated cascade
    static FrequencyConstraints strict() { return {8, 4}; }
    // desk constraints: only exact zero sums are excluded; band separation is
    // then verified spectrally at runtime
    static FrequencyConstraints lab() { return {1, 1}; }
};

struct SearchExhausted : std::runtime_error {
    explicit SearchExhausted(const std::string& m) : std::runtime_error(m) {}
};

// Exhaustive search for the lexicographically smallest feasible table with the
// smallest feasible n_max (cap loop + DFS in canonical slot order).
FrequencyTable assign_frequencies(const FamilySpec& fam, const FrequencyConstraints& fc,
                                  int n_cap_limit = 1024,
                                  long node_budget = 200000000L);

// brute triple-sum / pair-sum scan
bool verify_table(const FamilySpec& fam, const FrequencyTable& t,
                  const FrequencyConstraints& fc, std::string* why = nullptr);

// direction vector of a class (from basis_sets, honoring the overline variant)
Vec3 class_direction(const WaveClass& c, bool overline_uses_delta1);

} // namespace derf
