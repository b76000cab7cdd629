#include "partalg/polynomials.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace partalg {

using modp::Field;
using modp::MatP;
using modp::u64;

Cyclotomic LinearFormProduct::eval_form(std::size_t t, const std::vector<Rat>& x) const {
    Cyclotomic acc(forms[t].empty() ? 1 : forms[t][0].order());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) acc += forms[t][i] * x[i];
    return acc;
}

Cyclotomic LinearFormProduct::eval(const std::vector<Rat>& x) const {
    Cyclotomic acc(1, Rat(1));
    for (std::size_t t = 0; t < forms.size(); ++t)
        acc = (acc * eval_form(t, x).pow(multiplicities[t].get_ui())).canonical();
    return acc;
}

std::string LinearFormProduct::to_string() const {
    std::ostringstream os;
    for (std::size_t t = 0; t < forms.size(); ++t) {
        if (t) os << '*';
        os << '(';
        bool first = true;
        for (std::size_t i = 0; i < forms[t].size(); ++i) {
            const Cyclotomic& c = forms[t][i];
            if (c.is_zero()) continue;
            std::string s = c.to_string();
            const std::string var = "x" + std::to_string(i + 1);
            const bool compound = s.find_first_of("+-", 1) != std::string::npos;
            if (!first) {
                if (!compound && s[0] == '-') {
                    os << '-';
                    s = s.substr(1);
                } else {
                    os << '+';
                }
            }
            first = false;
            if (s == "1") os << var;
            else if (s == "-1") os << '-' << var;
            else if (compound) os << '(' << s << ")*" << var;
            else os << s << '*' << var;
        }
        if (first) os << '0';
        os << ')';
        if (multiplicities[t] != 1) os << '^' << multiplicities[t].get_str();
    }
    return os.str();
}

LinearFormProduct frobenius_polynomial(const PartitionCharacters& pc) {
    LinearFormProduct f;
    f.forms = pc.lambda;
    f.multiplicities = pc.degrees.d;
    std::set<std::vector<std::vector<Rat>>> seen;
    for (const auto& form : f.forms) {
        std::vector<std::vector<Rat>> key;
        for (const auto& c : form) key.push_back(c.canonical().coeffs());
        if (!seen.insert(key).second) throw VerificationError("Frobenius polynomial has repeated linear forms");
    }
    return f;
}

Poly degree_polynomial_casimir(const Casimir& c) {
    const Poly rev = c.charpoly.reversed();
    if (c.charpoly.coeff(0) == 0) throw VerificationError("Casimir matrix is singular");
    return rev.monic();
}

Poly degree_polynomial_from_degrees(const std::vector<Int>& d) {
    std::vector<Rat> roots;
    for (const Int& v : d) roots.emplace_back(v);
    return Poly::from_roots(roots);
}

std::string render_factored(const Poly& p) {
    if (!p.is_monic()) return p.to_string();
    auto roots = p.integer_roots();
    std::sort(roots.begin(), roots.end());
    if (static_cast<int>(roots.size()) != p.degree()) return p.to_string();
    if (roots.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < roots.size();) {
        std::size_t m = k;
        while (m < roots.size() && roots[m] == roots[k]) ++m;
        if (!first) os << '*';
        first = false;
        const Int& r = roots[k];
        if (r == 0) os << 'x';
        else if (r > 0) os << "(x-" << r.get_str() << ')';
        else os << "(x+" << Int(-r).get_str() << ')';
        if (m - k > 1) os << '^' << (m - k);
        k = m;
    }
    return os.str();
}

PPrimePart p_prime_part(const Poly& d, u64 p) {
    if (!d.is_integral()) throw std::invalid_argument("p_prime_part needs integer coefficients");
    const Field f(p);
    PPrimePart out;
    out.p = p;
    modp::PolyP c;
    for (const Rat& x : d.coeffs()) c.push_back(f.from(x.get_num()));
    modp::trim(c);
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    out.stripped = static_cast<unsigned>(k);
    out.reduced.assign(c.begin() + static_cast<long>(k), c.end());
    return out;
}

unsigned PPrimePart::multiplicity(u64 r) const {
    if (reduced.empty()) return 0;
    return modp::root_multiplicity(Field(p), reduced, r % p);
}

std::string PPrimePart::to_string() const {
    const Field f(p);
    if (reduced.size() <= 1) return reduced.empty() ? "0" : std::to_string(reduced[0]);
    std::mt19937_64 rng(1);
    const auto roots = modp::distinct_roots(f, reduced, rng);
    std::vector<std::pair<u64, unsigned>> factors;
    std::size_t total = 0;
    for (u64 r : roots) {
        factors.emplace_back(f.neg(r), modp::root_multiplicity(f, reduced, r));
        total += factors.back().second;
    }
    std::ostringstream os;
    if (total + 1 != reduced.size() || reduced.back() != 1) {
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            if (k) os << " + ";
            os << reduced[k];
            if (k == 1) os << "*x";
            if (k > 1) os << "*x^" << k;
        }
        return os.str();
    }
    std::sort(factors.begin(), factors.end());
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) os << '*';
        os << "(x+" << factors[k].first << ')';
        if (factors[k].second > 1) os << '^' << factors[k].second;
    }
    return os.str();
}

namespace {

struct Interned {
    std::vector<std::vector<int>> forms;  // value ids
    std::vector<Int> mult;
};

Interned intern(const LinearFormProduct& f, unsigned order, std::map<std::vector<Rat>, int>& ids) {
    Interned out;
    out.mult = f.multiplicities;
    for (const auto& form : f.forms) {
        std::vector<int> row;
        for (const auto& c : form) {
            auto key = c.lift_to(order).canonical().coeffs();
            auto it = ids.emplace(std::move(key), static_cast<int>(ids.size())).first;
            row.push_back(it->second);
        }
        out.forms.push_back(std::move(row));
    }
    return out;
}

// Multiset of (values at the chosen variables, multiplicity).
std::vector<std::pair<std::vector<int>, Int>> projection(const Interned& f, const std::vector<std::size_t>& vars) {
    std::vector<std::pair<std::vector<int>, Int>> out;
    for (std::size_t t = 0; t < f.forms.size(); ++t) {
        std::vector<int> v;
        for (std::size_t i : vars) v.push_back(f.forms[t][i]);
        out.emplace_back(std::move(v), f.mult[t]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PermutationVerdict equal_by_permutation(const LinearFormProduct& f, const LinearFormProduct& h) {
    PermutationVerdict v;
    const std::size_t n = f.n_vars();
    if (n != h.n_vars() || f.forms.size() != h.forms.size()) {
        v.reason = "different numbers of variables or forms";
        return v;
    }
    {
        std::vector<Int> a = f.multiplicities, b = h.multiplicities;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            v.reason = "different multiplicities (degree polynomials differ)";
            return v;
        }
    }
    unsigned order = 1;
    for (const auto* x : {&f, &h})
        for (const auto& form : x->forms)
            for (const auto& c : form) order = std::lcm(order, c.order());
    std::map<std::vector<Rat>, int> ids;
    const Interned F = intern(f, order, ids);
    const Interned H = intern(h, order, ids);
    // per-variable signature: multiset of (value, multiplicity) over forms
    auto signature = [](const Interned& x, std::size_t i) {
        std::vector<std::pair<int, Int>> s;
        for (std::size_t t = 0; t < x.forms.size(); ++t) s.emplace_back(x.forms[t][i], x.mult[t]);
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<std::vector<std::pair<int, Int>>> sf(n), sh(n);
    for (std::size_t i = 0; i < n; ++i) {
        sf[i] = signature(F, i);
        sh[i] = signature(H, i);
    }
    if (n == 0) {
        v.equal = true;
        return v;
    }
    if (sf[0] != sh[0]) {
        v.reason = "identity variables differ";
        return v;
    }
    std::vector<std::size_t> sigma(n, 0);
    std::vector<bool> used(n, false);
    used[0] = true;
    std::vector<std::size_t> hvars{0}, fvars{0};
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t c = 1; c < n; ++c) {
            if (used[c] || sf[c] != sh[i]) continue;
            hvars.push_back(i);
            fvars.push_back(c);
            if (projection(H, hvars) == projection(F, fvars)) {
                used[c] = true;
                sigma[i] = c;
                if (search(i + 1)) return true;
                used[c] = false;
            }
            hvars.pop_back();
            fvars.pop_back();
        }
        return false;
    };
    if (search(1)) {
        v.equal = true;
        v.sigma = sigma;
    } else {
        v.reason = "no variable permutation matches the forms";
    }
    return v;
}

FrobeniusReconstruction table_from_frobenius(const LinearFormProduct& fp, std::size_t group_order) {
    const std::size_t n = fp.n_vars();
    if (fp.forms.size() != n) throw VerificationError("number of forms differs from number of variables");
    unsigned order = 1;
    for (const auto& form : fp.forms)
        for (const auto& c : form) order = std::lcm(order, c.order());
    const u64 p = default_prime(group_order, order);
    const Field f(p);
    const u64 omega = f.primitive_root_of_unity(order);
    MatP rt(n, n);  // rt(t, l) = lambda_lt
    std::vector<std::vector<Cyclotomic>> lam(n);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t l = 0; l < n; ++l) {
            lam[t].push_back(fp.forms[t][l].lift_to(order));
            rt(t, l) = lam[t][l].reduce(f, omega);
        }
    MatP rhs(n, n * n);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rhs(t, i * n + j) = f.mul(rt(t, i), rt(t, j));
    const auto sol = modp::solve(f, rt, rhs);
    if (!sol) throw VerificationError("forms are linearly dependent (eigen matrix singular)");
    FrobeniusReconstruction out;
    out.tensor.n = n;
    out.tensor.a.assign(n * n * n, 0);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const u64 v = (*sol)(l, i * n + j);
                if (v > group_order) throw VerificationError("recovered structure constant does not lift");
                out.tensor.a[(l * n + i) * n + j] = static_cast<std::int64_t>(v);
            }
    // exact verification of lambda_i lambda_j = sum_l a_{lij} lambda_l
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Cyclotomic acc = lam[t][i] * lam[t][j];
                for (std::size_t l = 0; l < n; ++l)
                    if (out.tensor.at(l, i, j) != 0) acc -= lam[t][l] * Rat(static_cast<long>(out.tensor.at(l, i, j)));
                if (!acc.is_zero()) throw VerificationError("recovered tensor fails the product equations exactly");
            }
    GoodPartition& lay = out.layout;
    lay.group_order = group_order;
    lay.sizes.assign(n, 0);
    lay.inverse_block.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t hits = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (out.tensor.at(0, i, j) != 0) {
                ++hits;
                lay.inverse_block[i] = j;
                lay.sizes[i] = static_cast<std::size_t>(out.tensor.at(0, i, j));
            }
        if (hits != 1) throw VerificationError("cannot read the inverse pairing from the tensor");
    }
    for (std::size_t i = 0; i < n; ++i) lay.blocks.push_back({i});
    check_tensor_invariants(lay, out.tensor);
    const auto id = algebra_identity(out.tensor);
    if (!id) throw VerificationError("recovered tensor has no identity");
    lay.identity_coeffs = *id;
    const RegularRep r = regular_representation(out.tensor);
    out.gram = gram_matrix(r);
    out.degree_polynomial = degree_polynomial_casimir(casimir_matrix(r, lay));
    return out;
}

DeterminantCheck group_determinant_check(const FiniteGroup& g, const GoodPartition& p, const LinearFormProduct& f,
                                         std::size_t trials, std::uint64_t seed) {
    DeterminantCheck out;
    out.seed = seed;
    const std::size_t l = g.order();
    const bool covered = std::none_of(p.elem_block.begin(), p.elem_block.end(), [](long b) { return b < 0; });
    if (l > 60 || !covered || !p.identity_is_singleton()) {
        out.detail = "needs order <= 60, a full cover and identity block {e}";
        return out;
    }
    out.applicable = true;
    Int msum = 0;
    for (const Int& m : f.multiplicities) msum += m;
    if (msum != static_cast<unsigned long>(l)) {
        out.detail = "multiplicities sum to " + msum.get_str() + ", not the group order";
        return out;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    out.pass = true;
    for (std::size_t k = 0; k < trials; ++k) {
        std::vector<Rat> x(p.n());
        for (auto& v : x) v = dist(rng);
        IntMatrix m(l, l);
        for (Elem a = 0; a < l; ++a)
            for (Elem b = 0; b < l; ++b) m(a, b) = x[static_cast<std::size_t>(p.elem_block[g.mul(a, g.inv(b))])].get_num();
        const Int det = bareiss_determinant(std::move(m));
        const Cyclotomic rhs = f.eval(x);
        ++out.trials;
        if (!rhs.is_rational() || rhs.to_rational() != Rat(det)) {
            out.pass = false;
            out.detail = "trial " + std::to_string(k) + ": det = " + det.get_str() + ", product = " + rhs.to_string();
            return out;
        }
    }
    return out;
}

Lattice normal_subgroup_lattice(const StructTensor& t, const std::vector<std::size_t>& class_sizes) {
    const std::size_t n = t.n;
    using Mask = std::vector<bool>;
    auto closure = [&](Mask s) {
        s[0] = true;
        for (bool grown = true; grown;) {
            grown = false;
            for (std::size_t a = 0; a < n; ++a) {
                if (!s[a]) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    if (!s[b]) continue;
                    for (std::size_t c = 0; c < n; ++c)
                        if (!s[c] && t.at(c, a, b) != 0) {
                            s[c] = true;
                            grown = true;
                        }
                }
            }
        }
        return s;
    };
    std::set<Mask> found;
    found.insert(closure(Mask(n, false)));
    for (std::size_t c = 0; c < n; ++c) {
        Mask m(n, false);
        m[c] = true;
        found.insert(closure(m));
    }
    for (bool grown = true; grown;) {
        grown = false;
        std::vector<Mask> cur(found.begin(), found.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                Mask u(n);
                for (std::size_t k = 0; k < n; ++k) u[k] = cur[i][k] || cur[j][k];
                if (found.insert(closure(u)).second) grown = true;
            }
    }
    struct Node {
        std::vector<std::size_t> classes;
        std::size_t size;
        Mask mask;
    };
    std::vector<Node> nodes;
    for (const Mask& m : found) {
        Node nd{{}, 0, m};
        for (std::size_t k = 0; k < n; ++k)
            if (m[k]) {
                nd.classes.push_back(k);
                nd.size += class_sizes[k];
            }
        nodes.push_back(std::move(nd));
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const Node& a, const Node& b) { return std::tie(a.size, a.classes) < std::tie(b.size, b.classes); });
    Lattice out;
    auto subset = [&](const Mask& a, const Mask& b) {
        for (std::size_t k = 0; k < n; ++k)
            if (a[k] && !b[k]) return false;
        return true;
    };
    for (const auto& nd : nodes) {
        out.nodes.push_back(nd.classes);
        out.sizes.push_back(nd.size);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (i == j || nodes[i].size >= nodes[j].size || !subset(nodes[i].mask, nodes[j].mask)) continue;
            bool cover = true;
            for (std::size_t k = 0; k < nodes.size() && cover; ++k)
                if (k != i && k != j && nodes[i].size < nodes[k].size && nodes[k].size < nodes[j].size &&
                    subset(nodes[i].mask, nodes[k].mask) && subset(nodes[k].mask, nodes[j].mask))
                    cover = false;
            if (cover) out.edges.emplace_back(i, j);
        }
    return out;
}

std::vector<std::vector<std::size_t>> normal_subgroups_brute(const FiniteGroup& g, const ClassData& cd) {
    const std::size_t n = cd.n_classes;
    if (n > 26) throw InputError("too many classes for subset enumeration");
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
        std::size_t size = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (mask >> c & 1) size += cd.sizes[c];
        if (g.order() % size != 0) continue;
        std::vector<Elem> elems;
        std::vector<std::size_t> cls;
        for (std::size_t c = 0; c < n; ++c)
            if (mask >> c & 1) {
                cls.push_back(c);
                elems.insert(elems.end(), cd.members[c].begin(), cd.members[c].end());
            }
        bool closed = true;
        for (std::size_t a = 0; a < elems.size() && closed; ++a)
            for (std::size_t b = 0; b < elems.size() && closed; ++b)
                if (!(mask >> cd.class_of[g.mul(elems[a], elems[b])] & 1)) closed = false;
        if (closed) out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace partalg
