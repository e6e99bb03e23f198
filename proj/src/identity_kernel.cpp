#include "fibsum/identity_kernel.hpp"

#include <sstream>
#include <stdexcept>

#include "fibsum/parallel.hpp"

namespace fibsum {

namespace {

inline int sgn_pow(long long e) { return e % 2 == 0 ? 1 : -1; }

inline BigInt guard_value(const Seed& s) {
    BigInt g2 = s.g0 + s.g1;
    return s.g0 * g2 - s.g1 * s.g1;
}

} // namespace

long long ParamPoint::get(char v) const {
    switch (v) {
        case 'm': return m;
        case 'n': return n;
        case 'p': return p;
        case 'q': return q;
        case 'r': return r;
        case 's': return s;
        case 'k': return k;
    }
    throw std::invalid_argument("ParamPoint::get: unknown variable");
}

void ParamPoint::set(char v, long long value) {
    switch (v) {
        case 'm': m = value; return;
        case 'n': n = value; return;
        case 'p': p = value; return;
        case 'q': q = value; return;
        case 'r': r = value; return;
        case 's': s = value; return;
        case 'k': k = value; return;
    }
    throw std::invalid_argument("ParamPoint::set: unknown variable");
}

AlphaBeta decompose(const Seed& seed) {
    BigInt gm1 = seed.g1 - seed.g0;
    return {make_rat(gm1 + seed.g1, 2), make_rat(seed.g0, 2)};
}

Rat product_expand(const Seed& gseed, const Seed& hseed, long long m, long long n) {
    Sequence G(gseed);
    const BigInt& h0 = hseed.g0;
    const BigInt& h1 = hseed.g1;
    BigInt acc = (3 * h0 - h1) * G.at(m + n) + (2 * h1 - h0) * G.at(m + n + 1);
    BigInt inner = (2 * h0 + h1) * G.at(m - n) - (2 * h1 - h0) * G.at(m - n + 1);
    acc += sgn_pow(n) * inner;
    return make_rat(acc, 5);
}

Rat summand_expand(int which, long long p, long long q, long long r, long long s,
                   long long k) {
    Sequence F(FIB_SEED), L(LUCAS_SEED);
    switch (which) {
        case 1: // F_{p+k} F_{q+k}
            return make_rat(L.at(p + q + 2 * k) - L.at(p - q) * sgn_pow(q + k), 5);
        case 2: // F_{p+k} F_{q+k} F_{r+k}
            return make_rat(F.at(p + q + r + 3 * k) - sgn_pow(r + k) * F.at(p + q - r + k)
                                - L.at(p - q) * sgn_pow(q + k) * F.at(r + k),
                            5);
        case 3: // L_{p+k} L_{q+k}
            return Rat(L.at(p + q + 2 * k) + L.at(p - q) * sgn_pow(q + k));
        case 4: // L_{p+k} L_{q+k} L_{r+k}
            return Rat(L.at(p + q + r + 3 * k) + sgn_pow(r + k) * L.at(p + q - r + k)
                       + L.at(p - q) * sgn_pow(q + k) * L.at(r + k));
        case 5: // F_{p+k} F_{q+k} F_{r+k} F_{s+k}
            return make_rat(L.at(p + q + r + s + 4 * k)
                                - sgn_pow(s + k) * L.at(p + q + r - s + 2 * k)
                                - sgn_pow(r + k) * L.at(p + q - r + s + 2 * k)
                                - L.at(p - q) * sgn_pow(q + k) * L.at(r + s + 2 * k)
                                + sgn_pow(r + s) * L.at(p + q - r - s)
                                + sgn_pow(q + s) * L.at(p - q) * L.at(r - s),
                            25);
        case 6: // L_{p+k} L_{q+k} L_{r+k} L_{s+k}
            return Rat(L.at(p + q + r + s + 4 * k)
                       + sgn_pow(s + k) * L.at(p + q + r - s + 2 * k)
                       + sgn_pow(r + k) * L.at(p + q - r + s + 2 * k)
                       + L.at(p - q) * sgn_pow(q + k) * L.at(r + s + 2 * k)
                       + sgn_pow(r + s) * L.at(p + q - r - s)
                       + sgn_pow(q + s) * L.at(p - q) * L.at(r - s));
    }
    throw std::invalid_argument("summand_expand: which must be 1..6");
}

namespace {

std::vector<CoreIdentity> build_table() {
    std::vector<CoreIdentity> t;
    auto add = [&](const char* name, const char* vars, int slots, bool guarded,
                   IdentitySide lhs, IdentitySide rhs) {
        t.push_back({name, vars, slots, guarded, std::move(lhs), std::move(rhs)});
    };
    using P = const ParamPoint&;
    using S = const SeqSet&;

    add("gfl", "n", 1, false,
        [](P p, S s) { return Rat(s.G.at(p.n)); },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            return make_rat((2 * g.g1 - g.g0) * s.F.at(p.n) + g.g0 * s.L.at(p.n), 2);
        });
    add("gmin", "n", 1, false,
        [](P p, S s) { return Rat(s.G.at(-p.n)); },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            BigInt bracket = (2 * g.g1 - g.g0) * s.F.at(p.n) - g.g0 * s.L.at(p.n);
            return make_rat(sgn_pow(p.n + 1) * bracket, 2);
        });
    add("gfromf", "n", 1, false,
        [](P p, S s) { return Rat(s.G.at(p.n)); },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            return Rat((g.g1 - g.g0) * s.F.at(p.n) + g.g0 * s.F.at(p.n + 1));
        });
    add("gfroml", "n", 1, false,
        [](P p, S s) { return Rat(s.G.at(p.n)); },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            return make_rat((3 * g.g0 - g.g1) * s.L.at(p.n)
                                + (2 * g.g1 - g.g0) * s.L.at(p.n + 1),
                            5);
        });
    add("ffromg", "n", 1, true,
        [](P p, S s) { return Rat(s.F.at(p.n)); },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            return make_rat(-g.g1 * s.G.at(p.n) + g.g0 * s.G.at(p.n + 1),
                            guard_value(g));
        });
    add("lfromg", "n", 1, true,
        [](P p, S s) { return Rat(s.L.at(p.n)); },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            return make_rat((2 * g.g0 + g.g1) * s.G.at(p.n)
                                + (g.g0 - 2 * g.g1) * s.G.at(p.n + 1),
                            guard_value(g));
        });
    add("gminus", "n", 1, true,
        [](P p, S s) { return Rat(s.G.at(-p.n)); },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            BigInt gm1 = g.g1 - g.g0;
            BigInt num = (g.g0 * g.g0 + g.g1 * g.g1) * s.G.at(p.n)
                         + (gm1 * gm1 - g.g1 * g.g1) * s.G.at(p.n + 1);
            return make_rat(sgn_pow(p.n) * num, guard_value(g));
        });
    add("hfromg", "n", 2, true,
        [](P p, S s) { return Rat(s.H.at(p.n)); },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            const Seed& h = s.H.seed();
            BigInt g2 = g.g0 + g.g1;
            BigInt num = (h.g0 * g2 - h.g1 * g.g1) * s.G.at(p.n)
                         + (g.g0 * h.g1 - g.g1 * h.g0) * s.G.at(p.n + 1);
            return make_rat(num, guard_value(g));
        });
    add("ghprod", "nm", 2, false,
        [](P p, S s) { return Rat(s.G.at(p.n) * s.H.at(p.m)); },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            BigInt acc = (3 * g.g0 - g.g1) * s.H.at(p.m + p.n)
                         + (2 * g.g1 - g.g0) * s.H.at(p.m + p.n + 1);
            BigInt inner = (2 * g.g0 + g.g1) * s.H.at(p.m - p.n)
                           - (2 * g.g1 - g.g0) * s.H.at(p.m - p.n + 1);
            return make_rat(acc + sgn_pow(p.n) * inner, 5);
        });
    add("gsquare", "n", 1, false,
        [](P p, S s) { return Rat(s.G.at(p.n) * s.G.at(p.n)); },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            BigInt acc = (3 * g.g0 - g.g1) * s.G.at(2 * p.n)
                         + (2 * g.g1 - g.g0) * s.G.at(2 * p.n + 1)
                         + 2 * sgn_pow(p.n) * guard_value(g);
            return make_rat(acc, 5);
        });
    add("comm", "nm", 2, false,
        [](P p, S s) { return Rat(s.G.at(p.n) * s.H.at(p.m) - s.G.at(p.m) * s.H.at(p.n)); },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            const Seed& h = s.H.seed();
            return Rat(sgn_pow(p.n) * (g.g0 * h.g1 - g.g1 * h.g0) * s.F.at(p.m - p.n));
        });
    add("general", "nmrpq", 2, false,
        [](P p, S s) {
            return Rat(s.G.at(p.n + p.r + p.p) * s.H.at(p.m + p.r + p.q)
                       - s.G.at(p.n + p.r) * s.H.at(p.m + p.r + p.p + p.q));
        },
        [](P p, S s) {
            BigInt inner = s.G.at(p.p) * s.H.at(p.m - p.n + p.q)
                           - s.G.seed().g0 * s.H.at(p.m - p.n + p.p + p.q);
            return Rat(sgn_pow(p.n + p.r) * inner);
        });
    add("plusplus", "nmp", 2, false,
        [](P p, S s) {
            return Rat(s.G.at(p.n - p.p) * s.H.at(p.m + p.p)
                       + s.G.at(p.n - p.p + 1) * s.H.at(p.m + p.p + 1));
        },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            return Rat(g.g0 * s.H.at(p.m + p.n) + g.g1 * s.H.at(p.m + p.n + 1));
        });
    add("cassini", "nmp", 2, false,
        [](P p, S s) {
            return Rat(s.G.at(p.n + p.p) * s.H.at(p.m + p.p)
                       - s.G.at(p.n + p.p - 1) * s.H.at(p.m + p.p + 1));
        },
        [](P p, S s) {
            BigInt inner = s.G.seed().g0 * s.H.at(p.m - p.n)
                           - s.G.at(-1) * s.H.at(p.m - p.n + 1);
            return Rat(sgn_pow(p.n + p.p) * inner);
        });
    add("prod1", "nm", 2, false,
        [](P p, S s) {
            return Rat(s.G.at(p.n) * s.H.at(p.m) + s.G.at(p.n + 1) * s.H.at(p.m + 1));
        },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            BigInt acc = (3 * g.g0 - g.g1) * (s.H.at(p.m + p.n) + s.H.at(p.m + p.n + 2))
                         + (2 * g.g1 - g.g0) * (s.H.at(p.m + p.n + 1) + s.H.at(p.m + p.n + 3));
            return make_rat(acc, 5);
        });
    add("prod2", "nm", 2, false,
        [](P p, S s) {
            return Rat(s.G.at(p.n) * s.H.at(p.m) - s.G.at(p.n - 1) * s.H.at(p.m + 1));
        },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            BigInt acc = (2 * g.g0 + g.g1) * (s.H.at(p.m - p.n) + s.H.at(p.m - p.n + 2))
                         - (2 * g.g1 - g.g0) * (s.H.at(p.m - p.n + 1) + s.H.at(p.m - p.n + 3));
            return make_rat(sgn_pow(p.n) * acc, 5);
        });
    add("prod3", "nm", 2, false,
        [](P p, S s) {
            return Rat(2 * s.G.at(p.n) * s.H.at(p.m) + s.G.at(p.n - 1) * s.H.at(p.m - 1)
                       + s.G.at(p.n + 1) * s.H.at(p.m + 1));
        },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            return Rat((3 * g.g0 - g.g1) * s.H.at(p.m + p.n)
                       + (2 * g.g1 - g.g0) * s.H.at(p.m + p.n + 1));
        });
    add("prod4", "nm", 2, false,
        [](P p, S s) {
            return Rat(3 * s.G.at(p.n) * s.H.at(p.m) - s.G.at(p.n - 1) * s.H.at(p.m - 1)
                       - s.G.at(p.n + 1) * s.H.at(p.m + 1));
        },
        [](P p, S s) {
            const Seed& g = s.G.seed();
            BigInt inner = (2 * g.g0 + g.g1) * s.H.at(p.m - p.n)
                           - (2 * g.g1 - g.g0) * s.H.at(p.m - p.n + 1);
            return Rat(sgn_pow(p.n) * inner);
        });

    // Summand expansions: products of F/L values at consecutive offsets.
    add("summand1", "pqk", 0, false,
        [](P p, S s) { return Rat(s.F.at(p.p + p.k) * s.F.at(p.q + p.k)); },
        [](P p, S) { return summand_expand(1, p.p, p.q, 0, 0, p.k); });
    add("summand2", "pqrk", 0, false,
        [](P p, S s) {
            return Rat(s.F.at(p.p + p.k) * s.F.at(p.q + p.k) * s.F.at(p.r + p.k));
        },
        [](P p, S) { return summand_expand(2, p.p, p.q, p.r, 0, p.k); });
    add("summand3", "pqk", 0, false,
        [](P p, S s) { return Rat(s.L.at(p.p + p.k) * s.L.at(p.q + p.k)); },
        [](P p, S) { return summand_expand(3, p.p, p.q, 0, 0, p.k); });
    add("summand4", "pqrk", 0, false,
        [](P p, S s) {
            return Rat(s.L.at(p.p + p.k) * s.L.at(p.q + p.k) * s.L.at(p.r + p.k));
        },
        [](P p, S) { return summand_expand(4, p.p, p.q, p.r, 0, p.k); });
    add("summand5", "pqrsk", 0, false,
        [](P p, S s) {
            return Rat(s.F.at(p.p + p.k) * s.F.at(p.q + p.k) * s.F.at(p.r + p.k)
                       * s.F.at(p.s + p.k));
        },
        [](P p, S) { return summand_expand(5, p.p, p.q, p.r, p.s, p.k); });
    add("summand6", "pqrsk", 0, false,
        [](P p, S s) {
            return Rat(s.L.at(p.p + p.k) * s.L.at(p.q + p.k) * s.L.at(p.r + p.k)
                       * s.L.at(p.s + p.k));
        },
        [](P p, S) { return summand_expand(6, p.p, p.q, p.r, p.s, p.k); });

    // Cube/quartic specializations at a single index.
    add("fcube", "k", 0, false,
        [](P p, S s) { BigInt f = s.F.at(p.k); return Rat(f * f * f); },
        [](P p, S s) {
            return make_rat(s.F.at(3 * p.k) - 3 * sgn_pow(p.k) * s.F.at(p.k), 5);
        });
    add("lcube-expand", "k", 0, false,
        [](P p, S s) { BigInt l = s.L.at(p.k); return Rat(l * l * l); },
        [](P p, S s) {
            return Rat(s.L.at(3 * p.k) + 3 * sgn_pow(p.k) * s.L.at(p.k));
        });
    add("fquartic-expand", "k", 0, false,
        [](P p, S s) { BigInt f = s.F.at(p.k); return Rat(f * f * f * f); },
        [](P p, S s) {
            return make_rat(s.L.at(4 * p.k) - 4 * sgn_pow(p.k) * s.L.at(2 * p.k) + 6, 25);
        });
    add("lquartic-expand", "k", 0, false,
        [](P p, S s) { BigInt l = s.L.at(p.k); return Rat(l * l * l * l); },
        [](P p, S s) {
            return Rat(s.L.at(4 * p.k) + 4 * sgn_pow(p.k) * s.L.at(2 * p.k) + 6);
        });

    return t;
}

} // namespace

const std::vector<CoreIdentity>& core_identities() {
    static const std::vector<CoreIdentity> table = build_table();
    return table;
}

const CoreIdentity* find_core_identity(std::string_view name) {
    for (const auto& id : core_identities())
        if (id.name == name) return &id;
    return nullptr;
}

Verdict check_core_identity(const CoreIdentity& id, const ParamPoint& params,
                            const SeqSet& seqs) {
    if (id.guarded && guard_value(seqs.G.seed()) == 0)
        throw GuardViolated("g0*g2 - g1^2 != 0");
    Rat l = id.lhs(params, seqs);
    Rat r = id.rhs(params, seqs);
    return {l == r, std::move(l), std::move(r)};
}

const std::vector<Seed>& standard_seeds() {
    static const std::vector<Seed> seeds{FIB_SEED, LUCAS_SEED, Seed{1, 1}, Seed{3, -2},
                                         Seed{-1, 4}};
    return seeds;
}

namespace {

std::string seed_str(const Seed& s) {
    std::ostringstream os;
    os << "(" << s.g0 << "," << s.g1 << ")";
    return os.str();
}

} // namespace

GridReport run_identity_grid(const CoreIdentity& id, long long range,
                             const std::vector<Seed>& seeds) {
    GridReport rep;
    rep.name = id.name;
    const std::size_t arity = id.vars.size();
    std::vector<long long> point(arity, -range);
    std::size_t seed_combos = 1;
    for (int i = 0; i < id.seed_slots; ++i) seed_combos *= seeds.size();

    for (std::size_t sc = 0; sc < seed_combos; ++sc) {
        SeqSet ss;
        Seed g = FIB_SEED, h = FIB_SEED;
        if (id.seed_slots >= 1) g = seeds[sc % seeds.size()];
        if (id.seed_slots >= 2) h = seeds[sc / seeds.size()];
        ss.assign(g, h);

        std::fill(point.begin(), point.end(), -range);
        for (;;) {
            ParamPoint pp;
            for (std::size_t i = 0; i < arity; ++i) pp.set(id.vars[i], point[i]);
            Verdict v = check_core_identity(id, pp, ss);
            ++rep.points;
            if (!v.equal) {
                ++rep.failures;
                if (rep.first_failure.empty()) {
                    std::ostringstream os;
                    os << id.name << " @";
                    for (std::size_t i = 0; i < arity; ++i)
                        os << " " << id.vars[i] << "=" << point[i];
                    if (id.seed_slots >= 1) os << " G=" << seed_str(g);
                    if (id.seed_slots >= 2) os << " H=" << seed_str(h);
                    os << ": lhs=" << rat_str(v.lhs_value)
                       << " rhs=" << rat_str(v.rhs_value);
                    rep.first_failure = os.str();
                }
            }
            // Odometer step over the declared variables.
            std::size_t i = 0;
            for (; i < arity; ++i) {
                if (point[i] < range) {
                    ++point[i];
                    break;
                }
                point[i] = -range;
            }
            if (i == arity) break;
        }
    }
    return rep;
}

std::vector<GridReport> run_all_identity_grids(long long range,
                                               const std::vector<Seed>& seeds) {
    const auto& table = core_identities();
    std::vector<GridReport> out(table.size());
    parallel_for(table.size(),
                 [&](std::size_t i) { out[i] = run_identity_grid(table[i], range, seeds); });
    return out;
}

} // namespace fibsum
