#include "doctest.h"

#include "derf/frequency.hpp"

using namespace derf;

TEST_CASE("strict constraints: single phi chain needs magnitudes {8,16}") {
    FamilySpec fam = FamilySpec::phi_chain_only();
    FrequencyTable t = assign_frequencies(fam, FrequencyConstraints::strict());
    REQUIRE(t.n_signed[0].size() == 2);
    CHECK(t.n_signed[0][0] == 8);   // passive
    CHECK(t.n_signed[0][1] == -16); // active = -2 * passive
    CHECK(verify_table(fam, t, FrequencyConstraints::strict()));
}

TEST_CASE("strict constraints: six R classes pack as the arithmetic gap-8 ladder") {
    FamilySpec fam;
    for (int d = 0; d < 3; ++d) {
        fam.classes[0].push_back({Tier::overline_R, d, Role::none});
        fam.classes[1].push_back({Tier::diamond_R, d, Role::none});
    }
    FrequencyTable t = assign_frequencies(fam, FrequencyConstraints::strict());
    CHECK(t.n_signed[0] == std::vector<int>({4, 12, 20}));
    CHECK(t.n_signed[1] == std::vector<int>({28, 36, 44}));
    std::string why;
    CHECK_MESSAGE(verify_table(fam, t, FrequencyConstraints::strict(), &why), why);
}

TEST_CASE("desk family table for the 64-grid") {
    FamilySpec fam = FamilySpec::desk64();
    FrequencyTable t = assign_frequencies(fam, FrequencyConstraints::lab());
    // consecutive integers with a single chain doubling: the only vanishing
    // signed sum is the designated cascade 6 + 6 - 12
    CHECK(t.n_signed[0] == std::vector<int>({6, -12, 7, 8, 9}));
    CHECK(t.n_signed[1] == std::vector<int>({10, 11}));
    CHECK(t.n_max() == 12);
    std::string why;
    CHECK_MESSAGE(verify_table(fam, t, FrequencyConstraints::lab(), &why), why);
}

TEST_CASE("brute verification rejects broken tables") {
    FamilySpec fam = FamilySpec::phi_chain_only();
    FrequencyTable t = assign_frequencies(fam, FrequencyConstraints::strict());
    FrequencyTable bad = t;
    bad.n_signed[0][1] = -15; // breaks the cascade sum
    CHECK_FALSE(verify_table(fam, bad, FrequencyConstraints::strict()));
    FrequencyTable dup = t;
    dup.n_signed[0][1] = -8; // collides with the passive magnitude
    CHECK_FALSE(verify_table(fam, dup, FrequencyConstraints::strict()));
}

TEST_CASE("full family is searchable under lab margins") {
    FamilySpec fam = FamilySpec::full();
    FrequencyTable t = assign_frequencies(fam, FrequencyConstraints::lab(), 512);
    std::string why;
    CHECK_MESSAGE(verify_table(fam, t, FrequencyConstraints::lab(), &why), why);
    // conjugation symmetry is structural: signed values negate under sigma,
    // so it suffices that cascade sums vanish, which verify_table checks
    CHECK(t.n_max() >= 14);
}
