// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#include "homavg/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <gmpxx.h>
#include <set>
#include <tuple>
#include <utility>

#include "homavg/error.hpp"
#include "homavg/families.hpp"
#include "homavg/laws.hpp"

namespace homavg {

namespace {

constexpr const char* slot_names[] = {"f1", "f2", "g1", "g2"};

Scalar& slot_ref(Profile& p, int slot)
{
    switch (slot) {
    case 0:
        return p.f1;
    case 1:
        return p.f2;
    case 2:
        return p.g1;
    default:
        return p.g2;
    }
}

const Scalar& slot_ref(const Profile& p, int slot)
{
    return slot_ref(const_cast<Profile&>(p), slot);
}

double resolve_ceiling(const SearchSpace& s)
{
    if (s.ceiling) {
        return *s.ceiling;
    }
    if (const char* env = std::getenv("HOMAVG_CLASSIFY_CEILING")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) {
            return v;
        }
    }
    return 1e20;
}

void validate(const SearchSpace& s)
{
    if (s.algebra != "witt" && s.algebra != "w22") {
        throw InvalidParameter("unknown algebra '" + s.algebra + "'");
    }
    if (s.M < 1) {
        throw InvalidParameter("window must be at least 1");
    }
    bool zero = false;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (s.values[i].bound() && s.values[i].field() != s.field) {
            throw InvalidParameter("value " + s.values[i].to_string() + " is over a different field");
        }
        zero = zero || s.values[i].is_zero();
        for (std::size_t j = 0; j < i; ++j) {
            if (s.field.zero() + s.values[i] == s.field.zero() + s.values[j]) {
                throw InvalidParameter("value set repeats " + s.values[i].to_string());
            }
        }
    }
    if (!zero) {
        throw InvalidParameter("value set must contain 0");
    }
}

struct Term {
    int a; // -1 for a linear term
    int b;
    std::vector<Scalar> table; // coefficient times values, indexed by va * |S| + vb or vb
};

struct Constraint {
    std::vector<Term> terms;
};

// The compiled search problem: unknowns in assignment order and constraints
// bucketed by the position of their last unknown.
struct Compiled {
    std::vector<Unknown> unknowns;
    std::map<std::pair<int, long>, int> index;
    std::vector<std::vector<Constraint>> by_level;
    std::size_t window = 0;
    long count = 0;
};

using Key = std::pair<int, int>;
using Poly2 = std::map<Key, Scalar>;

Key key(int a, int b)
{
    return a <= b ? Key{a, b} : Key{b, a};
}

Compiled compile(const SearchSpace& s, const HomAlgebra& alg)
{
    Compiled c;
    const int slots = s.components() == 2 ? 4 : 1;
    auto by_distance = [&](const Unknown& x, const Unknown& y) {
        const long mx = x.t - s.d, my = y.t - s.d;
        return std::make_tuple(std::labs(mx), mx, x.slot) < std::make_tuple(std::labs(my), my, y.slot);
    };
    // Window entries first, then the outer degrees the constraints also read.
    std::vector<Unknown> outer;
    for (long t : averaging_degrees(alg, s.d, s.M)) {
        for (int slot = 0; slot < slots; ++slot) {
            (std::labs(t - s.d) <= s.M ? c.unknowns : outer).push_back({slot, t});
        }
    }
    std::sort(c.unknowns.begin(), c.unknowns.end(), by_distance);
    std::sort(outer.begin(), outer.end(), by_distance);
    c.window = c.unknowns.size();
    c.unknowns.insert(c.unknowns.end(), outer.begin(), outer.end());
    for (std::size_t i = 0; i < c.unknowns.size(); ++i) {
        c.index[{c.unknowns[i].slot, c.unknowns[i].t}] = static_cast<int>(i);
    }
    c.by_level.resize(c.unknowns.size());

    // P(b) as (unknown, target) pairs.
    using Image = std::vector<std::pair<int, BasisIndex>>;
    auto image = [&](const BasisIndex& b) -> Image {
        const long t = b.degree + s.d;
        if (slots == 1) {
            return Image{{c.index.at({0, t}), L(t)}};
        }
        // P(L) = f1 L + g1 W, P(W) = f2 L + g2 W.
        const bool l = b.family == Family::L;
        return Image{{c.index.at({l ? 0 : 1, t}), L(t)}, {c.index.at({l ? 2 : 3, t}), W(t)}};
    };
    auto image_of = [&](const Element& e, std::map<BasisIndex, Poly2>& out, int other, const Scalar& sign) {
        for (const auto& [o, coef] : e.terms()) {
            const Image img = image(o);
            for (const auto& [v, target] : img) {
                Scalar& slot = out[target][key(other, v)];
                slot = slot + sign * coef;
            }
        }
    };
    std::set<std::string> seen;
    auto emit = [&](const std::map<BasisIndex, Poly2>& polys) {
        for (const auto& [target, poly] : polys) {
            Constraint con;
            std::string sig;
            int level = -1;
            for (const auto& [k, coef] : poly) {
                if (coef.is_zero()) {
                    continue;
                }
                sig += std::to_string(k.first) + "," + std::to_string(k.second) + ":" + coef.to_string() + ";";
                Term term{k.first, k.second, {}};
                for (std::size_t va = 0; va < (k.first < 0 ? 1 : s.values.size()); ++va) {
                    for (std::size_t vb = 0; vb < s.values.size(); ++vb) {
                        Scalar v = coef * s.values[vb];
                        if (k.first >= 0) {
                            v = v * s.values[va];
                        }
                        term.table.push_back(s.field.zero() + v);
                    }
                }
                level = std::max({level, k.first, k.second});
                con.terms.push_back(std::move(term));
            }
            if (con.terms.empty() || !seen.insert(sig).second) {
                continue;
            }
            ++c.count;
            c.by_level[level].push_back(std::move(con));
        }
    };

    const Scalar minus = -s.field.one();
    const auto basis = alg.window_basis(s.M);
    for (const auto& x : basis) {
        std::map<BasisIndex, Poly2> polys;
        const Image px = image(x);
        for (const auto& [v, b] : px) {
            const Element tw = alg.twist_basis(b);
            for (const auto& [o, coef] : tw.terms()) {
                Scalar& slot = polys[o][key(-1, v)];
                slot = slot + coef;
            }
        }
        image_of(alg.twist_basis(x), polys, -1, minus);
        emit(polys);
    }
    for (const auto& x : basis) {
        for (const auto& y : basis) {
            const Image px = image(x), py = image(y);
            std::map<BasisIndex, Poly2> both;
            for (const auto& [va, ba] : px) {
                for (const auto& [vb, bb] : py) {
                    const Element br = alg.bracket_basis(ba, bb);
                    for (const auto& [o, coef] : br.terms()) {
                        Scalar& slot = both[o][key(va, vb)];
                        slot = slot + coef;
                    }
                }
            }
            auto left = both;
            for (const auto& [va, ba] : px) {
                image_of(alg.bracket_basis(ba, y), left, va, minus);
            }
            auto right = both;
            for (const auto& [vb, bb] : py) {
                image_of(alg.bracket_basis(x, bb), right, vb, minus);
            }
            emit(left);
            emit(right);
        }
    }
    return c;
}

bool holds(const Constraint& con, const std::vector<int>& val, std::size_t nvals, const Scalar& zero)
{
    Scalar sum = zero;
    for (const auto& t : con.terms) {
        const std::size_t i = t.a < 0 ? static_cast<std::size_t>(val[t.b])
                                       : static_cast<std::size_t>(val[t.a]) * nvals + val[t.b];
        if (!t.table[i].is_zero()) {
            sum += t.table[i];
        }
    }
    return sum.is_zero();
}

HomogeneousOperator make_table(const SearchSpace& s, const std::vector<Unknown>& unknowns,
                               const std::vector<int>& values, const std::string& label)
{
    std::map<long, Profile> entries;
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
        Profile& p = entries[unknowns[i].t];
        slot_ref(p, unknowns[i].slot) = s.field.zero() + s.values[values[i]];
    }
    for (auto& [t, p] : entries) {
        for (int slot = 0; slot < 4; ++slot) {
            Scalar& v = slot_ref(p, slot);
            v = s.field.zero() + v;
        }
    }
    return HomogeneousOperator::table(s.field, s.components(), s.d, std::move(entries), label);
}

std::string raw_size(const SearchSpace& s, std::size_t n)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), s.values.size(), n);
    return r.get_str();
}

} // namespace

HomAlgebra SearchSpace::make_algebra() const
{
    return algebra == "w22" ? HomAlgebra::w22(field) : HomAlgebra::witt(field);
}

std::string Unknown::name() const
{
    return std::string(slot_names[slot]) + "(" + std::to_string(t) + ")";
}

HomogeneousOperator ProfileSet::table(std::size_t i) const
{
    return make_table(space, unknowns, extensions.at(i), "solution " + std::to_string(i));
}

bool ProfileSet::has_zero() const
{
    // The zero value sits at some index z; the zero profile is the constant z vector.
    int z = 0;
    while (!space.values[z].is_zero()) {
        ++z;
    }
    const std::vector<int> zero(window_unknowns, z);
    return std::binary_search(solutions.begin(), solutions.end(), zero);
}

ProfileSet enumerate_profiles(const SearchSpace& space)
{
    Stopwatch sw;
    validate(space);
    const HomAlgebra alg = space.make_algebra();
    ProfileSet out{space, {}, 0, {}, {}, {}, 0, 0, {}, 0.0};
    const Compiled c = compile(space, alg);
    out.unknowns = c.unknowns;
    out.window_unknowns = c.window;
    out.constraints = c.count;
    out.raw_size = raw_size(space, c.unknowns.size());
    if (mpz_class(out.raw_size).get_d() > resolve_ceiling(space)) {
        throw SearchRefused("search space of " + out.raw_size + " raw assignments exceeds the ceiling",
                            out.raw_size);
    }

    const std::size_t n = c.unknowns.size(), nv = space.values.size();
    const Scalar zero = space.field.zero();
    std::vector<int> val(n, 0);
    auto consistent = [&](std::size_t level) {
        for (const auto& con : c.by_level[level]) {
            if (!holds(con, val, nv, zero)) {
                return false;
            }
        }
        return true;
    };
    // Outer entries only need one consistent completion.
    std::function<bool(std::size_t)> extend = [&](std::size_t level) {
        if (level == n) {
            return true;
        }
        for (std::size_t v = 0; v < nv; ++v) {
            ++out.nodes;
            val[level] = static_cast<int>(v);
            if (consistent(level) && extend(level + 1)) {
                return true;
            }
        }
        return false;
    };
    std::function<void(std::size_t)> dfs = [&](std::size_t level) {
        if (level == c.window) {
            if (extend(level)) {
                out.solutions.emplace_back(val.begin(), val.begin() + static_cast<long>(c.window));
                out.extensions.push_back(val);
            }
            return;
        }
        for (std::size_t v = 0; v < nv; ++v) {
            ++out.nodes;
            val[level] = static_cast<int>(v);
            if (consistent(level)) {
                dfs(level + 1);
            }
        }
    };
    dfs(0);

    for (std::size_t i = 0; i < out.solutions.size(); ++i) {
        if (!check_averaging(alg, out.table(i), space.M).pass) {
            out.reverify_failures.push_back(i);
        }
    }
    out.millis = sw.millis();
    return out;
}

std::vector<std::vector<int>> brute_force_profiles(const SearchSpace& space)
{
    validate(space);
    const HomAlgebra alg = space.make_algebra();
    const Compiled c = compile(space, alg);
    const std::size_t n = c.unknowns.size(), nv = space.values.size();
    if (mpz_class(raw_size(space, n)).get_d() > resolve_ceiling(space)) {
        throw SearchRefused("brute force over " + raw_size(space, n) + " assignments refused", raw_size(space, n));
    }
    std::set<std::vector<int>> out;
    std::vector<int> val(n, 0);
    while (true) {
        const std::vector<int> head(val.begin(), val.begin() + static_cast<long>(c.window));
        if (!out.count(head) && check_averaging(alg, make_table(space, c.unknowns, val, "brute"), space.M).pass) {
            out.insert(head);
        }
        std::size_t i = n;
        while (i > 0 && val[i - 1] == static_cast<int>(nv) - 1) {
            val[--i] = 0;
        }
        if (i == 0) {
            break;
        }
        ++val[i - 1];
    }
    return {out.begin(), out.end()};
}

namespace {

struct ParamSpec {
    std::string name;
    bool nonzero = false;
};

// Calls visit with every assignment of values from S to the named parameters.
void each_assignment(const SearchSpace& s, const std::vector<ParamSpec>& specs,
                     const std::function<void(const std::map<std::string, Scalar>&)>& visit)
{
    std::map<std::string, Scalar> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == specs.size()) {
            visit(cur);
            return;
        }
        for (const auto& v : s.values) {
            if (specs[i].nonzero && v.is_zero()) {
                continue;
            }
            cur[specs[i].name] = s.field.zero() + v;
            rec(i + 1);
        }
    };
    rec(0);
}

std::optional<std::vector<int>> restrict_to(const SearchSpace& s, const std::vector<Unknown>& unknowns,
                                            const HomogeneousOperator& op)
{
    std::vector<int> out;
    for (const auto& u : unknowns) {
        if (std::labs(u.t - s.d) > s.M) {
            continue;
        }
        const Scalar v = s.field.zero() + slot_ref(op.profile(u.t), u.slot);
        auto it = std::find_if(s.values.begin(), s.values.end(),
                               [&](const Scalar& x) { return s.field.zero() + x == v; });
        if (it == s.values.end()) {
            return std::nullopt;
        }
        out.push_back(static_cast<int>(it - s.values.begin()));
    }
    return out;
}

} // namespace

CoverageReport match_families(const ProfileSet& profiles)
{
    const SearchSpace& s = profiles.space;
    CoverageReport rep;
    rep.restriction = "Completeness is claimed only relative to the window |m| <= " + std::to_string(s.M) +
                      " and the value set S = {" +
                      [&] {
                          std::string r;
                          for (std::size_t i = 0; i < s.values.size(); ++i) {
                              r += (i ? ", " : "") + s.values[i].to_string();
                          }
                          return r;
                      }() +
                      "}.";
    std::vector<FamilyOperator> ops;
    auto add = [&](FamilyOperator fam) {
        if (auto vals = restrict_to(s, profiles.unknowns, fam.op)) {
            rep.instances.push_back({fam.id, fam.parameter_strings, *vals, {}});
            ops.push_back(std::move(fam));
        } else {
            ++rep.out_of_range;
        }
    };
    const ScalarField& f = s.field;
    if (s.algebra == "witt") {
        if (f.q_is_one()) {
            each_assignment(s, {{"beta"}, {"nu"}}, [&](const auto& p) {
                add(make_witt_family({1, s.d, p.at("beta"), p.at("nu"), Scalar(), 1}, f, 0));
            });
            if (s.d != 0) {
                each_assignment(s, {{"gamma", true}}, [&](const auto& p) {
                    for (int mu : {0, 1}) {
                        add(make_witt_family({2, s.d, Scalar(), Scalar(), p.at("gamma"), mu}, f, 0));
                    }
                });
            }
        } else if (f.q_pow_is_one(s.d)) {
            each_assignment(s, {{"beta"}, {"nu"}}, [&](const auto& p) {
                add(make_witt_family({3, s.d, p.at("beta"), p.at("nu"), Scalar(), 1}, f, 0));
            });
        }
    } else {
        const bool pm1 = f.q_is_one() || f.q_is_minus_one();
        std::optional<W22FamilyParams::Case> kase;
        if (!pm1 && f.q_pow_is_one(s.d)) {
            kase = W22FamilyParams::Case::root_of_unity;
        } else if (pm1 && s.d == 0) {
            kase = W22FamilyParams::Case::degree_zero;
        }
        if (kase) {
            const std::vector<ParamSpec> nus{{"nu1"}, {"nu2"}, {"nu3"}, {"nu4"}};
            const std::vector<std::vector<ParamSpec>> extra{{{"gamma"}},
                                                            {{"beta", true}, {"gamma"}},
                                                            {{"beta", true}},
                                                            {{"gamma"}, {"beta", true}},
                                                            {{"gamma"}, {"theta"}, {"beta", true}}};
            for (int v = 1; v <= 5; ++v) {
                auto specs = nus;
                specs.insert(specs.end(), extra[v - 1].begin(), extra[v - 1].end());
                each_assignment(s, specs, [&](const auto& p) {
                    W22FamilyParams w;
                    w.variant = v;
                    w.kase = *kase;
                    w.d = s.d;
                    w.nu1 = p.at("nu1");
                    w.nu2 = p.at("nu2");
                    w.nu3 = p.at("nu3");
                    w.nu4 = p.at("nu4");
                    auto get = [&](const char* k) { return p.count(k) ? p.at(k) : Scalar(); };
                    w.gamma = get("gamma");
                    w.theta = get("theta");
                    w.beta = get("beta");
                    add(make_w22_family(w, f, 0));
                });
            }
        }
    }
    if (rep.instances.empty() && rep.out_of_range == 0) {
        // Outside every classified regime only the zero operator remains.
        rep.instances.push_back({"zero", {}, restrict_to(s, profiles.unknowns,
                                                         HomogeneousOperator::zero(f, s.components(), s.d))
                                                 .value(),
                                 {}});
    }

    std::map<std::vector<int>, std::vector<std::size_t>> by_values;
    for (std::size_t i = 0; i < rep.instances.size(); ++i) {
        by_values[rep.instances[i].values].push_back(i);
    }
    std::set<std::vector<int>> solution_set(profiles.solutions.begin(), profiles.solutions.end());
    for (std::size_t i = 0; i < profiles.solutions.size(); ++i) {
        auto it = by_values.find(profiles.solutions[i]);
        if (it == by_values.end()) {
            rep.unmatched_solutions.push_back(i);
        } else {
            rep.matched.push_back({i, it->second});
        }
    }
    for (std::size_t i = 0; i < rep.instances.size(); ++i) {
        if (solution_set.count(rep.instances[i].values)) {
            continue;
        }
        rep.unmatched_instances.push_back(i);
        if (i >= ops.size()) {
            continue;
        }
        // Rebuild with verification at the space window to attach the ledger explanation.
        const FamilyOperator& fam = ops.at(i);
        const FamilyOperator checked = fam.is_witt()
                                           ? make_witt_family(std::get<WittFamilyParams>(fam.params), f, s.M)
                                           : make_w22_family(std::get<W22FamilyParams>(fam.params), f, s.M);
        rep.instances[i].explanation = checked.expected_failure;
    }
    return rep;
}

} // namespace homavg
