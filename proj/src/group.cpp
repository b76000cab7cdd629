#include "partalg/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <tuple>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "partalg/kernels.hpp"

namespace partalg {

namespace {

using Perm = std::vector<std::uint16_t>;

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto v : p) h = (h ^ v) * 1099511628211ULL;
        return h;
    }
};

// Cayley table of a list of permutations closed under composition; xy means "x then y".
FiniteGroup table_from_perms(const std::vector<Perm>& elems, const std::string& origin) {
    std::unordered_map<Perm, Elem, PermHash> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Elem>(i));
    const std::size_t n = elems.size();
    const std::size_t deg = elems.empty() ? 0 : elems[0].size();
    std::vector<Elem> table(n * n);
    Perm prod(deg);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t k = 0; k < deg; ++k) prod[k] = elems[b][elems[a][k]];
            table[a * n + b] = index.at(prod);
        }
    return FiniteGroup(n, std::move(table), origin);
}

std::vector<Perm> close_permutations(const std::vector<Perm>& gens, std::size_t degree, std::size_t bound) {
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    std::unordered_map<Perm, Elem, PermHash> seen{{id, 0}};
    Perm prod(degree);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const Perm& g : gens) {
            for (std::size_t k = 0; k < degree; ++k) prod[k] = g[elems[head][k]];
            if (seen.count(prod)) continue;
            if (elems.size() >= bound)
                throw InputError("generator closure exceeds order bound " + std::to_string(bound));
            seen.emplace(prod, static_cast<Elem>(elems.size()));
            elems.push_back(prod);
        }
    }
    return elems;
}

FiniteGroup cyclic(std::size_t k) {
    std::vector<Elem> t(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) t[a * k + b] = static_cast<Elem>((a + b) % k);
    return FiniteGroup(k, std::move(t), "Zn:" + std::to_string(k));
}

FiniteGroup symmetric_or_alternating(std::size_t k, bool alternating, std::size_t bound) {
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= k; ++i) {
        fact *= i;
        if ((alternating ? fact / 2 : fact) > bound) throw InputError("group order exceeds bound");
    }
    Perm p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> elems;
    do {
        if (alternating) {
            // parity by cycle count
            std::vector<bool> seen(k, false);
            std::size_t cycles = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (seen[i]) continue;
                ++cycles;
                for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
            }
            if ((k - cycles) % 2 != 0) continue;
        }
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return table_from_perms(elems, (alternating ? "An:" : "Sn:") + std::to_string(k));
}

FiniteGroup dihedral(std::size_t order) {
    if (order < 2 || order % 2 != 0) throw InputError("dihedral order must be even and >= 2");
    const std::size_t k = order / 2;
    // element r^a s^b has index a + k b
    std::vector<Elem> t(order * order);
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t a = x % k, b = x / k, c = y % k, d = y / k;
            const std::size_t rot = b == 0 ? (a + c) % k : (a + k - c) % k;
            t[x * order + y] = static_cast<Elem>(rot + k * ((b + d) % 2));
        }
    return FiniteGroup(order, std::move(t), "D:" + std::to_string(order));
}

FiniteGroup quaternion8() {
    // units 1, i, j, k with sign: index 2*u + s, u in {1,i,j,k}, s = 1 for negative
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<Elem> t(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            const int u = x / 2, v = y / 2;
            const int s = (x % 2 + y % 2 + unit_sign[u][v]) % 2;
            t[static_cast<std::size_t>(x * 8 + y)] = static_cast<Elem>(2 * unit_mul[u][v] + s);
        }
    return FiniteGroup(8, std::move(t), "Q8");
}

FiniteGroup special_linear_2(unsigned p, std::size_t bound) {
    if (p < 2) throw InputError("SL2:<p> needs a prime p");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InputError("SL2:<p> needs a prime p");
    using M = std::array<unsigned, 4>;
    std::vector<M> elems{{1, 0, 0, 1}};
    for (unsigned a = 0; a < p; ++a)
        for (unsigned b = 0; b < p; ++b)
            for (unsigned c = 0; c < p; ++c)
                for (unsigned d = 0; d < p; ++d) {
                    if ((a * d + p * p - b * c % p) % p != 1) continue;
                    M m{a, b, c, d};
                    if (m != elems[0]) elems.push_back(m);
                }
    if (elems.size() > bound) throw InputError("group order exceeds bound");
    std::map<M, Elem> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elem>(i);
    const std::size_t n = elems.size();
    std::vector<Elem> t(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const M& u = elems[x];
            const M& v = elems[y];
            M w{(u[0] * v[0] + u[1] * v[2]) % p, (u[0] * v[1] + u[1] * v[3]) % p, (u[2] * v[0] + u[3] * v[2]) % p,
                (u[2] * v[1] + u[3] * v[3]) % p};
            t[x * n + y] = index.at(w);
        }
    return FiniteGroup(n, std::move(t), "SL2:" + std::to_string(p));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t bound) {
    const std::size_t n = g.order() * h.order();
    if (n > bound) throw InputError("group order exceeds bound");
    std::vector<Elem> t(n * n);
    const std::size_t m = h.order();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            t[x * n + y] = static_cast<Elem>(g.mul(static_cast<Elem>(x / m), static_cast<Elem>(y / m)) * m +
                                             h.mul(static_cast<Elem>(x % m), static_cast<Elem>(y % m)));
    return FiniteGroup(n, std::move(t), g.origin() + "x" + h.origin());
}

std::size_t parse_size(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("bad number in " + what + ": '" + s + "'");
    }
}

FiniteGroup builtin_factor(const std::string& spec, std::size_t bound) {
    auto arg = [&](std::size_t prefix) { return parse_size(spec.substr(prefix), spec); };
    if (spec == "Q8") return quaternion8();
    if (spec.rfind("Zn:", 0) == 0) {
        const std::size_t k = arg(3);
        if (k < 1 || k > bound) throw InputError("cyclic order out of range: " + spec);
        return cyclic(k);
    }
    if (spec.rfind("Sn:", 0) == 0) return symmetric_or_alternating(arg(3), false, bound);
    if (spec.rfind("An:", 0) == 0) return symmetric_or_alternating(arg(3), true, bound);
    if (spec.rfind("D:", 0) == 0) {
        const std::size_t k = arg(2);
        if (k > bound) throw InputError("group order exceeds bound");
        return dihedral(k);
    }
    if (spec.rfind("SL2:", 0) == 0) return special_linear_2(static_cast<unsigned>(arg(4)), bound);
    throw InputError("unknown builtin group '" + spec + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Elem> table, std::string origin)
    : order_(order), table_(std::move(table)), origin_(std::move(origin)) {
    if (order_ == 0) throw InputError("group order must be positive");
    if (table_.size() != order_ * order_) throw InputError("table size does not match order");
    for (Elem v : table_)
        if (v >= order_) throw InputError("table entry out of range");
    // Latin square
    std::vector<std::uint32_t> stamp(order_, 0);
    std::uint32_t mark = 0;
    for (std::size_t r = 0; r < order_; ++r) {
        ++mark;
        for (std::size_t c = 0; c < order_; ++c) {
            Elem v = table_[r * order_ + c];
            if (stamp[v] == mark) throw InputError("table is not a Latin square (row " + std::to_string(r + 1) + ")");
            stamp[v] = mark;
        }
    }
    for (std::size_t c = 0; c < order_; ++c) {
        ++mark;
        for (std::size_t r = 0; r < order_; ++r) {
            Elem v = table_[r * order_ + c];
            if (stamp[v] == mark)
                throw InputError("table is not a Latin square (column " + std::to_string(c + 1) + ")");
            stamp[v] = mark;
        }
    }
    for (std::size_t x = 0; x < order_; ++x)
        if (table_[x] != x || table_[x * order_] != x) throw InputError("element 1 is not the identity");
    if (auto bad = kernels::associativity_violation(order_, table_, 10 * order_ * order_, 0x5eed))
        throw InputError("table is not associative at (" + std::to_string((*bad)[0] + 1) + "," +
                         std::to_string((*bad)[1] + 1) + "," + std::to_string((*bad)[2] + 1) + ")");
    inv_.assign(order_, 0);
    for (std::size_t x = 0; x < order_; ++x)
        for (std::size_t y = 0; y < order_; ++y)
            if (table_[x * order_ + y] == 0) {
                inv_[x] = static_cast<Elem>(y);
                break;
            }
    elem_order_.assign(order_, 1);
    for (std::size_t x = 0; x < order_; ++x) {
        Elem cur = static_cast<Elem>(x);
        unsigned k = 1;
        while (cur != 0) {
            cur = mul(cur, static_cast<Elem>(x));
            ++k;
        }
        elem_order_[x] = k;
    }
}

Elem FiniteGroup::power(Elem a, long long k) const {
    const long long o = elem_order_[a];
    long long e = k % o;
    if (e < 0) e += o;
    Elem r = 0;
    Elem base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::string FiniteGroup::to_table_text() const {
    std::ostringstream os;
    os << order_ << '\n';
    for (std::size_t r = 0; r < order_; ++r) {
        for (std::size_t c = 0; c < order_; ++c) os << (c ? " " : "") << table_[r * order_ + c] + 1;
        os << '\n';
    }
    return os.str();
}

FiniteGroup builtin_group(const std::string& spec, std::size_t order_bound) {
    std::vector<std::string> factors;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i)
        if (i == spec.size() || spec[i] == 'x') {
            factors.push_back(spec.substr(start, i - start));
            start = i + 1;
        }
    if (factors.empty() || factors.front().empty()) throw InputError("empty builtin group spec");
    FiniteGroup g = builtin_factor(factors[0], order_bound);
    for (std::size_t k = 1; k < factors.size(); ++k) {
        if (factors[k].empty()) throw InputError("empty factor in '" + spec + "'");
        g = direct_product(g, builtin_factor(factors[k], order_bound), order_bound);
    }
    return g;
}

FiniteGroup group_from_table_text(const std::string& text, const std::string& origin, std::size_t order_bound) {
    std::istringstream in(text);
    long long n = 0;
    if (!(in >> n) || n <= 0) throw InputError("table file: first line must be the order");
    if (static_cast<std::size_t>(n) > order_bound)
        throw InputError("group order " + std::to_string(n) + " exceeds bound " + std::to_string(order_bound));
    const std::size_t order = static_cast<std::size_t>(n);
    std::vector<Elem> table(order * order);
    for (std::size_t k = 0; k < order * order; ++k) {
        long long v = 0;
        if (!(in >> v)) throw InputError("table file: expected " + std::to_string(order * order) + " entries");
        if (v < 1 || v > n) throw InputError("table file: entry out of range 1.." + std::to_string(n));
        table[k] = static_cast<Elem>(v - 1);
    }
    std::string extra;
    if (in >> extra) throw InputError("table file: trailing data");
    return FiniteGroup(order, std::move(table), origin);
}

FiniteGroup group_from_permutation_text(const std::string& text, const std::string& origin, std::size_t order_bound) {
    std::vector<std::vector<std::vector<std::size_t>>> gens;  // generator -> cycles (1-based points)
    std::size_t degree = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::vector<std::size_t>> cycles;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
            if (line[i] != '(') throw InputError("permutation file: expected '(' in: " + line);
            const auto close = line.find(')', i);
            if (close == std::string::npos) throw InputError("permutation file: unbalanced '(' in: " + line);
            std::string body = line.substr(i + 1, close - i - 1);
            std::replace(body.begin(), body.end(), ',', ' ');
            std::istringstream pts(body);
            std::vector<std::size_t> cyc;
            std::string tok;
            while (pts >> tok) {
                const std::size_t v = parse_size(tok, "permutation file");
                if (v == 0) throw InputError("permutation file: points are 1-based");
                if (std::find(cyc.begin(), cyc.end(), v) != cyc.end())
                    throw InputError("permutation file: repeated point in cycle");
                degree = std::max(degree, v);
                cyc.push_back(v);
            }
            cycles.push_back(std::move(cyc));
            i = close + 1;
        }
        gens.push_back(std::move(cycles));
    }
    if (degree > 65535) throw InputError("permutation degree too large");
    if (degree == 0) degree = 1;
    std::vector<Perm> perms;
    for (const auto& cycles : gens) {
        Perm p(degree);
        std::iota(p.begin(), p.end(), 0);
        std::vector<bool> moved(degree, false);
        for (const auto& cyc : cycles)
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                const std::size_t from = cyc[k] - 1;
                if (moved[from] && cyc.size() > 1) throw InputError("permutation file: cycles are not disjoint");
                moved[from] = true;
                p[from] = static_cast<std::uint16_t>(cyc[(k + 1) % cyc.size()] - 1);
            }
        perms.push_back(std::move(p));
    }
    return table_from_perms(close_permutations(perms, degree, order_bound), origin);
}

FiniteGroup load_group(const GroupSource& src) {
    switch (src.kind) {
        case GroupSource::Kind::Builtin:
            return builtin_group(src.value, src.order_bound);
        case GroupSource::Kind::TableFile:
            return group_from_table_text(read_file(src.value), src.value, src.order_bound);
        case GroupSource::Kind::PermFile:
            return group_from_permutation_text(read_file(src.value), src.value, src.order_bound);
        case GroupSource::Kind::TableText:
            return group_from_table_text(src.value, "inline table", src.order_bound);
        case GroupSource::Kind::PermText:
            return group_from_permutation_text(src.value, "inline permutations", src.order_bound);
    }
    throw InputError("unknown group source");
}

std::size_t ClassData::power_class(std::size_t i, long long t) const {
    long long e = t % static_cast<long long>(exponent);
    if (e < 0) e += exponent;
    return power[i][static_cast<std::size_t>(e)];
}

unsigned exponent(const FiniteGroup& g) {
    unsigned e = 1;
    for (Elem x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
    return e;
}

ClassData conjugacy_classes(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<long> raw(n, -1);
    std::vector<std::vector<Elem>> orbits;
    for (Elem x = 0; x < n; ++x) {
        if (raw[x] >= 0) continue;
        std::vector<Elem> orbit;
        const long id = static_cast<long>(orbits.size());
        for (Elem y = 0; y < n; ++y) {
            const Elem c = g.mul(g.mul(y, x), g.inv(y));
            if (raw[c] < 0) {
                raw[c] = id;
                orbit.push_back(c);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    // canonical order: element order, then class size, then smallest member
    std::vector<std::size_t> perm(orbits.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        const auto ka = std::make_tuple(g.element_order(orbits[a][0]), orbits[a].size(), orbits[a][0]);
        const auto kb = std::make_tuple(g.element_order(orbits[b][0]), orbits[b].size(), orbits[b][0]);
        return ka < kb;
    });
    ClassData cd;
    cd.n_classes = orbits.size();
    cd.class_of.assign(n, 0);
    for (std::size_t k = 0; k < perm.size(); ++k) {
        auto& orbit = orbits[perm[k]];
        for (Elem e : orbit) cd.class_of[e] = k;
        cd.reps.push_back(orbit[0]);
        cd.sizes.push_back(orbit.size());
        cd.rep_order.push_back(g.element_order(orbit[0]));
        cd.members.push_back(std::move(orbit));
    }
    cd.exponent = exponent(g);
    cd.inverse_class.resize(cd.n_classes);
    cd.power.assign(cd.n_classes, std::vector<std::size_t>(cd.exponent, 0));
    for (std::size_t i = 0; i < cd.n_classes; ++i) {
        cd.inverse_class[i] = cd.class_of[g.inv(cd.reps[i])];
        Elem cur = 0;
        for (unsigned t = 0; t < cd.exponent; ++t) {
            cd.power[i][t] = cd.class_of[cur];
            cur = g.mul(cur, cd.reps[i]);
        }
    }
    return cd;
}

bool Subgroup::contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }

Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<Elem> elems{0};
    in[0] = true;
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (Elem s : gens) {
            const Elem y = g.mul(elems[head], s);
            if (!in[y]) {
                in[y] = true;
                elems.push_back(y);
            }
        }
    std::sort(elems.begin(), elems.end());
    return Subgroup{&g, std::move(elems)};
}

std::vector<unsigned> prime_divisors(std::size_t n) {
    std::vector<unsigned> ps;
    for (std::size_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(static_cast<unsigned>(p));
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(static_cast<unsigned>(n));
    return ps;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
    std::vector<Elem> out;
    for (Elem x = 0; x < g.order(); ++x) {
        const Elem xi = g.inv(x);
        bool ok = true;
        for (Elem m : s.members)
            if (!s.contains(g.mul(g.mul(x, m), xi))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return Subgroup{&g, std::move(out)};
}

Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p, std::uint64_t seed) {
    if (p < 2 || g.order() % p != 0)
        throw InputError("prime " + std::to_string(p) + " does not divide the group order");
    std::size_t target = 1;
    for (std::size_t m = g.order(); m % p == 0; m /= p) target *= p;
    std::mt19937_64 rng(seed);
    auto is_p_power = [p](std::size_t v) {
        while (v % p == 0) v /= p;
        return v == 1;
    };
    auto pick = [&](const std::vector<Elem>& cands) {
        if (seed == 0) return cands.front();
        std::uniform_int_distribution<std::size_t> d(0, cands.size() - 1);
        return cands[d(rng)];
    };
    // start from a cyclic p-subgroup
    std::vector<Elem> start;
    for (Elem x = 1; x < g.order(); ++x)
        if (is_p_power(g.element_order(x))) start.push_back(x);
    std::vector<Elem> gens{pick(start)};
    Subgroup s = generate_subgroup(g, gens);
    while (s.order() < target) {
        // an element of N(S) \ S of order p modulo S exists while S is not Sylow
        const Subgroup nrm = normalizer(g, s);
        std::vector<Elem> cands;
        for (Elem x : nrm.members)
            if (!s.contains(x) && s.contains(g.power(x, p))) cands.push_back(x);
        if (cands.empty()) throw VerificationError("Sylow growth stalled");
        gens.push_back(pick(cands));
        s = generate_subgroup(g, gens);
    }
    if (s.order() != target) throw VerificationError("Sylow growth overshot the p-part");
    return s;
}

FiniteGroup induced_group(const FiniteGroup& g, const Subgroup& s) {
    const std::size_t n = s.order();
    std::unordered_map<Elem, Elem> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(s.members[i], static_cast<Elem>(i));
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto it = index.find(g.mul(s.members[a], s.members[b]));
            if (it == index.end()) throw InputError("induced_group: members are not closed under multiplication");
            t[a * n + b] = it->second;
        }
    return FiniteGroup(n, std::move(t), "subgroup of order " + std::to_string(n) + " of " + g.origin());
}

}  // namespace partalg
