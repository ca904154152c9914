#include "derf/frequency.hpp"

#include <algorithm>
#include <cstdlib>

namespace derf {

FamilySpec FamilySpec::full() {
    FamilySpec f;
    std::vector<WaveClass> per;
    for (int d = 0; d < 3; ++d) per.push_back({Tier::overline_R, d, Role::none});
    for (int d = 0; d < 3; ++d) per.push_back({Tier::diamond_R, d, Role::none});
    for (int d = 0; d < 2; ++d) {
        per.push_back({Tier::diamond_phi, d, Role::passive});
        per.push_back({Tier::diamond_phi, d, Role::active});
    }
    for (int d = 0; d < 2; ++d) {
        per.push_back({Tier::overline_phi, d, Role::passive});
        per.push_back({Tier::overline_phi, d, Role::active});
    }
    f.classes[0] = per;
    f.classes[1] = per;
    return f;
}

FamilySpec FamilySpec::desk64() {
    FamilySpec f;
    f.classes[0] = {{Tier::diamond_phi, 0, Role::passive},
                    {Tier::diamond_phi, 0, Role::active},
                    {Tier::overline_R, 0, Role::none},
                    {Tier::overline_R, 1, Role::none},
                    {Tier::overline_R, 2, Role::none}};
    f.classes[1] = {{Tier::diamond_R, 0, Role::none}, {Tier::diamond_R, 1, Role::none}};
    return f;
}

FamilySpec FamilySpec::phi_chain_only() {
    FamilySpec f;
    f.classes[0] = {{Tier::diamond_phi, 0, Role::passive},
                    {Tier::diamond_phi, 0, Role::active}};
    f.classes[1] = {};
    return f;
}

int FrequencyTable::n_max() const {
    int m = 0;
    for (int p = 0; p < 2; ++p)
        for (int v : n_signed[p]) m = std::max(m, std::abs(v));
    return m;
}

namespace {

struct Entry {
    int mag;      // magnitude
    int chain;    // designated chain id for phi passives/actives, -1 otherwise
    bool is_active;
};

// triple of magnitudes (with repeats) is exempt only for the designated
// cascade pattern {p, p, 2p} taken from one chain
bool trio_exempt(const Entry& a, const Entry& b, const Entry& c) {
    const Entry* e[3] = {&a, &b, &c};
    int actives = 0, passives = 0, chain = -2;
    for (auto* x : e) {
        if (x->chain < 0) return false;
        if (chain == -2) chain = x->chain;
        if (x->chain != chain) return false;
        (x->is_active ? actives : passives)++;
    }
    return actives == 1 && passives == 2;
}

bool trio_ok(const Entry& a, const Entry& b, const Entry& c, int margin) {
    // all sign patterns; by symmetry fix sign of a
    const int sums[4] = {a.mag + b.mag + c.mag, a.mag + b.mag - c.mag,
                         a.mag - b.mag + c.mag, a.mag - b.mag - c.mag};
    for (int s : sums) {
        if (std::abs(s) >= margin) continue;
        if (s == 0 && trio_exempt(a, b, c)) continue;
        return false;
    }
    return true;
}

bool pair_ok(const Entry& a, const Entry& b, int margin) {
    // |n + n'| >= margin over signs, except the conjugate combination (sum 0)
    const int s1 = a.mag + b.mag;
    const int s2 = std::abs(a.mag - b.mag);
    if (s1 < margin) return false;
    if (s2 < margin && !(s2 == 0)) return false;
    if (s2 == 0 && &a != &b) return false; // distinct classes may not collide
    return true;
}

struct Searcher {
    const FrequencyConstraints fc;
    int cap;
    long nodes_left;
    std::vector<Entry> chosen;

    bool consistent(const Entry& e) const {
        if (e.mag < 1 || e.mag > cap) return false;
        if (2 * e.mag < fc.pair_margin) return false;
        for (const auto& o : chosen) {
            if (o.mag == e.mag) return false;
            if (!pair_ok(o, e, fc.pair_margin)) return false;
        }
        // triples with the new value appearing once, twice, or three times
        if (!trio_ok(e, e, e, fc.trio_margin)) return false;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            if (!trio_ok(e, e, chosen[i], fc.trio_margin)) return false;
            for (std::size_t j = i; j < chosen.size(); ++j)
                if (!trio_ok(e, chosen[i], chosen[j], fc.trio_margin)) return false;
        }
        return true;
    }

    // free slots: (chain_id or -1); chains add both p and 2p.  slot_group
    // marks interchangeable slots (same parity/tier/role): within a group the
    // values are forced ascending, which removes permutation copies.
    bool dfs(const std::vector<int>& slot_chain, const std::vector<int>& slot_group,
             std::size_t i, std::vector<int>& out) {
        if (i == slot_chain.size()) return true;
        int v0 = 1;
        for (std::size_t j = 0; j < i; ++j)
            if (slot_group[j] == slot_group[i]) v0 = std::max(v0, out[j] + 1);
        for (int v = v0; v <= cap; ++v) {
            if (--nodes_left < 0) throw SearchExhausted("node budget exhausted");
            const int chain = slot_chain[i];
            Entry e{v, chain, false};
            if (!consistent(e)) continue;
            chosen.push_back(e);
            bool ok = true;
            if (chain >= 0) {
                Entry ea{2 * v, chain, true};
                if (consistent(ea))
                    chosen.push_back(ea);
                else
                    ok = false;
            }
            if (ok) {
                out[i] = v;
                if (dfs(slot_chain, slot_group, i + 1, out)) return true;
            }
            if (chain >= 0 && ok) chosen.pop_back();
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

FrequencyTable assign_frequencies(const FamilySpec& fam, const FrequencyConstraints& fc,
                                  int n_cap_limit, long node_budget) {
    // free slots in canonical order: parity-major, class order as listed,
    // skipping actives (forced to 2x their chain passive)
    std::vector<int> slot_chain;             // chain id or -1 per free slot
    std::vector<int> slot_group;             // symmetry group per free slot
    std::vector<std::pair<int, int>> where;  // (parity, class index) per free slot
    int next_chain = 0;
    for (int p = 0; p < 2; ++p) {
        for (std::size_t ci = 0; ci < fam.classes[p].size(); ++ci) {
            const WaveClass& c = fam.classes[p][ci];
            if (c.role == Role::passive) {
                slot_chain.push_back(next_chain++);
                slot_group.push_back(p * 16 + int(c.tier) * 4 + 1);
                where.emplace_back(p, int(ci));
            } else if (c.role == Role::none) {
                slot_chain.push_back(-1);
                slot_group.push_back(p * 16 + int(c.tier) * 4);
                where.emplace_back(p, int(ci));
            }
        }
    }

    const int lb = std::max(1, (fc.pair_margin + 1) / 2);
    // pass 1: greedy lex-minimal table, upper bound for the cap
    std::vector<int> greedy(slot_chain.size(), 0);
    int cap_hi = 0;
    {
        Searcher s{fc, n_cap_limit, node_budget, {}};
        if (!s.dfs(slot_chain, slot_group, 0, greedy))
            throw SearchExhausted("assign_frequencies: no feasible table up to cap " +
                                  std::to_string(n_cap_limit));
        for (std::size_t i = 0; i < greedy.size(); ++i)
            cap_hi = std::max(cap_hi, (slot_chain[i] >= 0 ? 2 : 1) * greedy[i]);
    }
    // pass 2: smallest feasible cap, within a shared node budget; if the pool
    // drains first, the greedy table stands (deterministic either way)
    std::vector<int> chosen_out = greedy;
    long pool = node_budget;
    for (int cap = lb; cap < cap_hi && pool > 0; ++cap) {
        Searcher s{fc, cap, pool, {}};
        std::vector<int> out(slot_chain.size(), 0);
        bool found = false;
        try {
            found = s.dfs(slot_chain, slot_group, 0, out);
            pool = s.nodes_left;
        } catch (const SearchExhausted&) {
            break;
        }
        if (found) {
            chosen_out = out;
            break;
        }
    }
    FrequencyTable t;
    for (int p = 0; p < 2; ++p) t.n_signed[p].assign(fam.classes[p].size(), 0);
    for (std::size_t i = 0; i < where.size(); ++i) {
        auto [p, ci] = where[i];
        t.n_signed[p][ci] = chosen_out[i];
    }
    // actives: n = -2 * chain passive
    for (int p = 0; p < 2; ++p)
        for (std::size_t ci = 0; ci < fam.classes[p].size(); ++ci) {
            const WaveClass& c = fam.classes[p][ci];
            if (c.role != Role::active) continue;
            for (std::size_t cj = 0; cj < fam.classes[p].size(); ++cj) {
                const WaveClass& pc = fam.classes[p][cj];
                if (pc.role == Role::passive && pc.tier == c.tier && pc.dir == c.dir)
                    t.n_signed[p][ci] = -2 * t.n_signed[p][cj];
            }
        }
    return t;
}

bool verify_table(const FamilySpec& fam, const FrequencyTable& t,
                  const FrequencyConstraints& fc, std::string* why) {
    std::vector<Entry> all;
    for (int p = 0; p < 2; ++p)
        for (std::size_t ci = 0; ci < fam.classes[p].size(); ++ci) {
            const WaveClass& c = fam.classes[p][ci];
            int chain = -1;
            if (c.role != Role::none) {
                // chain identity: (parity, tier, dir)
                chain = p * 100 + int(c.tier) * 10 + c.dir;
            }
            all.push_back(Entry{std::abs(t.n_signed[p][ci]), chain, c.role == Role::active});
        }
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i].mag < 1) return fail("nonpositive magnitude");
        if (2 * all[i].mag < fc.pair_margin) return fail("pair margin (self)");
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i].mag == all[j].mag) return fail("duplicate magnitude (injectivity)");
            if (!pair_ok(all[i], all[j], fc.pair_margin)) return fail("pair margin");
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j)
            for (std::size_t k = j; k < all.size(); ++k)
                if (!trio_ok(all[i], all[j], all[k], fc.trio_margin))
                    return fail("trio margin at (" + std::to_string(all[i].mag) + "," +
                                std::to_string(all[j].mag) + "," + std::to_string(all[k].mag) +
                                ")");
    // cascade sums
    for (int p = 0; p < 2; ++p)
        for (std::size_t ci = 0; ci < fam.classes[p].size(); ++ci) {
            const WaveClass& c = fam.classes[p][ci];
            if (c.role != Role::active) continue;
            for (std::size_t cj = 0; cj < fam.classes[p].size(); ++cj) {
                const WaveClass& pc = fam.classes[p][cj];
                if (pc.role == Role::passive && pc.tier == c.tier && pc.dir == c.dir)
                    if (2 * t.n_signed[p][cj] + t.n_signed[p][ci] != 0)
                        return fail("cascade sum nonzero");
            }
        }
    return true;
}

Vec3 class_direction(const WaveClass& c, bool overline_uses_delta1) {
    const BasisSets& b = basis_sets();
    switch (c.tier) {
        case Tier::overline_R:
            return overline_uses_delta1 ? b.overline_R_alt[c.dir] : b.overline_R[c.dir];
        case Tier::diamond_R:
            return b.diamond_R[c.dir];
        case Tier::diamond_phi:
            return b.diamond_phi[c.dir];
        case Tier::overline_phi:
            return b.overline_phi[c.dir];
    }
    return Vec3{};
}

} // namespace derf
