#include "h1cube/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "h1cube/arith_util.hpp"
#include "h1cube/errors.hpp"

namespace h1cube {

// ---------------------------------------------------------------- Realization

Realization Realization::permutation(unsigned degree) {
    Realization r;
    r.kind_ = Kind::Perm;
    r.degree_ = degree;
    return r;
}

Realization Realization::matrix(RingPtr ring, bool projective) {
    Realization r;
    r.kind_ = Kind::Mat;
    r.ring_ = std::move(ring);
    r.projective_ = projective;
    if (projective && r.ring_->kind() != SmallRing::Kind::GF)
        throw InvalidInput("projective matrix realization requires a field");
    return r;
}

Element Realization::identity() const {
    Element e;
    if (kind_ == Kind::Perm) {
        e.perm.resize(degree_);
        std::iota(e.perm.begin(), e.perm.end(), 0);
    }
    return e;  // Mat2 defaults to the identity matrix
}

Element Realization::mul(const Element& x, const Element& y) const {
    Element out;
    if (kind_ == Kind::Perm) {
        out.perm.resize(degree_);
        for (unsigned i = 0; i < degree_; ++i) out.perm[i] = x.perm[y.perm[i]];
        return out;
    }
    const SmallRing& R = *ring_;
    const Mat2 &A = x.mat, &B = y.mat;
    out.mat.a = R.add(R.mul(A.a, B.a), R.mul(A.b, B.c));
    out.mat.b = R.add(R.mul(A.a, B.b), R.mul(A.b, B.d));
    out.mat.c = R.add(R.mul(A.c, B.a), R.mul(A.d, B.c));
    out.mat.d = R.add(R.mul(A.c, B.b), R.mul(A.d, B.d));
    return canon(std::move(out));
}

Element Realization::inv(const Element& x) const {
    Element out;
    if (kind_ == Kind::Perm) {
        out.perm.resize(degree_);
        for (unsigned i = 0; i < degree_; ++i) out.perm[x.perm[i]] = static_cast<uint16_t>(i);
        return out;
    }
    const SmallRing& R = *ring_;
    const Mat2& A = x.mat;
    uint16_t det = R.sub(R.mul(A.a, A.d), R.mul(A.b, A.c));
    uint16_t dinv = R.inv(det);
    if (dinv == 0 && det != 1) throw InvalidInput("matrix is not invertible");
    out.mat.a = R.mul(A.d, dinv);
    out.mat.b = R.mul(R.neg(A.b), dinv);
    out.mat.c = R.mul(R.neg(A.c), dinv);
    out.mat.d = R.mul(A.a, dinv);
    return canon(std::move(out));
}

Element Realization::canon(Element x) const {
    if (kind_ == Kind::Mat && projective_) {
        const SmallRing& R = *ring_;
        uint16_t lead = x.mat.a ? x.mat.a : x.mat.b ? x.mat.b : x.mat.c ? x.mat.c : x.mat.d;
        uint16_t s = R.inv(lead);
        x.mat.a = R.mul(x.mat.a, s);
        x.mat.b = R.mul(x.mat.b, s);
        x.mat.c = R.mul(x.mat.c, s);
        x.mat.d = R.mul(x.mat.d, s);
    }
    return x;
}

std::string Realization::key(const Element& x) const {
    std::string s;
    if (kind_ == Kind::Perm) {
        s.resize(2 * x.perm.size());
        for (size_t i = 0; i < x.perm.size(); ++i) {
            s[2 * i] = static_cast<char>(x.perm[i] & 0xff);
            s[2 * i + 1] = static_cast<char>(x.perm[i] >> 8);
        }
        return s;
    }
    s.resize(8);
    uint16_t vals[4] = {x.mat.a, x.mat.b, x.mat.c, x.mat.d};
    for (int i = 0; i < 4; ++i) {
        s[2 * i] = static_cast<char>(vals[i] & 0xff);
        s[2 * i + 1] = static_cast<char>(vals[i] >> 8);
    }
    return s;
}

bool Realization::eq(const Element& x, const Element& y) const {
    if (kind_ == Kind::Perm) return x.perm == y.perm;
    return x.mat == y.mat;
}

Element Realization::make_perm(std::vector<uint16_t> images) const {
    if (kind_ != Kind::Perm || images.size() != degree_)
        throw InvalidInput("make_perm: wrong realization or degree");
    std::vector<bool> seen(degree_, false);
    for (auto v : images) {
        if (v >= degree_ || seen[v]) throw InvalidInput("make_perm: not a permutation");
        seen[v] = true;
    }
    Element e;
    e.perm = std::move(images);
    return e;
}

Element Realization::make_mat(long long a, long long b, long long c, long long d) const {
    if (kind_ != Kind::Mat) throw InvalidInput("make_mat: not a matrix realization");
    Element e;
    e.mat.a = ring_->from_int(a);
    e.mat.b = ring_->from_int(b);
    e.mat.c = ring_->from_int(c);
    e.mat.d = ring_->from_int(d);
    return canon(std::move(e));
}

Element Realization::make_mat_idx(uint16_t a, uint16_t b, uint16_t c, uint16_t d) const {
    if (kind_ != Kind::Mat) throw InvalidInput("make_mat_idx: not a matrix realization");
    if (std::max(std::max(a, b), std::max(c, d)) >= ring_->size())
        throw InvalidInput("make_mat_idx: entry index out of range");
    Element e;
    e.mat = {a, b, c, d};
    return canon(std::move(e));
}

std::string Realization::show(const Element& x) const {
    std::ostringstream os;
    if (kind_ == Kind::Perm) {
        // cycle notation
        std::vector<bool> seen(degree_, false);
        bool any = false;
        for (unsigned i = 0; i < degree_; ++i) {
            if (seen[i] || x.perm[i] == i) continue;
            os << '(';
            unsigned j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) os << ' ';
                os << j;
                first = false;
                j = x.perm[j];
            }
            os << ')';
            any = true;
        }
        if (!any) os << "()";
    } else {
        os << "[[" << x.mat.a << ',' << x.mat.b << "],[" << x.mat.c << ',' << x.mat.d << "]]";
    }
    return os.str();
}

unsigned element_order(const Realization& real, const Element& x) {
    Element id = real.identity();
    Element cur = real.canon(x);
    unsigned k = 1;
    while (!real.eq(cur, id)) {
        cur = real.mul(cur, x);
        ++k;
        if (k > 2'000'000) throw Error("element_order: runaway (element not of finite order?)");
    }
    return k;
}

std::vector<Element> cyclic_subgroup(const Realization& real, const Element& x) {
    std::vector<Element> out{real.identity()};
    Element cur = real.canon(x);
    while (!real.eq(cur, out.front())) {
        out.push_back(cur);
        cur = real.mul(cur, x);
    }
    return out;
}

// ---------------------------------------------------------------- FiniteGroup

std::vector<int> canonical_class_positions(const std::vector<unsigned>& order,
                                           const std::vector<long long>& size,
                                           const std::vector<std::string>& repkey,
                                           const std::function<int(int, unsigned)>& powcls) {
    const int n = static_cast<int>(order.size());
    std::vector<std::vector<long long>> key(n);
    for (int i = 0; i < n; ++i) key[i] = {static_cast<long long>(order[i]), size[i]};

    auto partition_id = [&]() {
        std::map<std::vector<long long>, int> ids;
        std::vector<int> out(n);
        for (int i = 0; i < n; ++i) out[i] = ids.emplace(key[i], (int)ids.size()).first->second;
        return out;
    };

    std::vector<int> part = partition_id();
    for (int round = 0; round < n + 1; ++round) {
        // rank each class by its current key
        std::map<std::vector<long long>, int> rank;
        for (int i = 0; i < n; ++i) rank.emplace(key[i], 0);
        int r = 0;
        for (auto& [k, v] : rank) v = r++;
        std::vector<std::vector<long long>> next(n);
        for (int i = 0; i < n; ++i) {
            next[i] = key[i];
            for (unsigned k = 2; k <= order[i]; ++k)
                next[i].push_back(rank[key[powcls(i, k)]]);
        }
        key = std::move(next);
        std::vector<int> part2 = partition_id();
        if (part2 == part) break;
        part = std::move(part2);
    }

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (key[a] != key[b]) return key[a] < key[b];
        return repkey[a] < repkey[b];
    });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[idx[i]] = i;
    return pos;
}

namespace {

std::string letter_suffix(int k) {
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('a' + k % 26));
        k = k / 26 - 1;
    } while (k >= 0);
    return s;
}

void assign_labels(std::vector<ConjugacyClass>& classes) {
    std::map<unsigned, int> counter;
    for (auto& c : classes) c.label = std::to_string(c.order) + letter_suffix(counter[c.order]++);
}

}  // namespace

GroupPtr FiniteGroup::enumerate(Realization real, std::vector<Element> gens,
                                std::string description, long long cap) {
    auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    G->real_ = real;
    G->description_ = std::move(description);
    G->enumerated_ = true;
    for (auto& g : gens) g = real.canon(std::move(g));
    G->gens_ = gens;

    // breadth-first closure
    std::unordered_map<std::string, int> seen;
    std::vector<Element> elems;
    elems.push_back(real.identity());
    seen.emplace(real.key(elems[0]), 0);
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int i = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            Element next = real.mul(elems[i], g);
            std::string k = real.key(next);
            if (seen.emplace(k, (int)elems.size()).second) {
                elems.push_back(std::move(next));
                if ((long long)elems.size() > cap)
                    throw OrderCapExceeded("group enumeration exceeded cap of " +
                                           std::to_string(cap));
                frontier.push_back((int)elems.size() - 1);
            }
        }
    }

    // deterministic element order: sort by key
    std::sort(elems.begin(), elems.end(),
              [&](const Element& a, const Element& b) { return real.key(a) < real.key(b); });
    G->elems_ = std::move(elems);
    G->order_ = (long long)G->elems_.size();
    G->index_.reserve(G->elems_.size() * 2);
    for (int i = 0; i < (int)G->elems_.size(); ++i) G->index_.emplace(real.key(G->elems_[i]), i);

    // conjugacy classes: orbits of the conjugation action of the generators
    std::vector<Element> gen_invs;
    for (const auto& g : gens) gen_invs.push_back(real.inv(g));
    std::vector<int> cls(G->elems_.size(), -1);
    std::vector<std::vector<int>> members;
    for (int i = 0; i < (int)G->elems_.size(); ++i) {
        if (cls[i] >= 0) continue;
        int ci = (int)members.size();
        std::vector<int> orbit{i};
        cls[i] = ci;
        std::deque<int> q{i};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                Element conj = real.mul(real.mul(gens[gi], G->elems_[x]), gen_invs[gi]);
                int j = G->index_.at(real.key(conj));
                if (cls[j] < 0) {
                    cls[j] = ci;
                    orbit.push_back(j);
                    q.push_back(j);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        members.push_back(std::move(orbit));
    }

    const int nc = (int)members.size();
    std::vector<unsigned> orders(nc);
    std::vector<long long> sizes(nc);
    std::vector<std::string> repkeys(nc);
    for (int c = 0; c < nc; ++c) {
        const Element& rep = G->elems_[members[c][0]];  // indices sorted => min key
        orders[c] = element_order(real, rep);
        sizes[c] = (long long)members[c].size();
        repkeys[c] = real.key(rep);
    }
    auto powcls = [&](int c, unsigned k) {
        const Element& rep = G->elems_[members[c][0]];
        Element cur = real.identity();
        for (unsigned i = 0; i < k; ++i) cur = real.mul(cur, rep);
        return cls[G->index_.at(real.key(cur))];
    };
    std::vector<int> pos = canonical_class_positions(orders, sizes, repkeys, powcls);

    G->classes_.resize(nc);
    G->class_members_.resize(nc);
    for (int c = 0; c < nc; ++c) {
        ConjugacyClass cc;
        cc.rep = G->elems_[members[c][0]];
        cc.order = orders[c];
        cc.size = sizes[c];
        G->classes_[pos[c]] = std::move(cc);
        G->class_members_[pos[c]] = std::move(members[c]);
    }
    G->elem_class_.resize(G->elems_.size());
    for (int c = 0; c < nc; ++c)
        for (int e : G->class_members_[c]) G->elem_class_[e] = c;
    assign_labels(G->classes_);
    return G;
}

GroupPtr FiniteGroup::structural(Realization real, std::vector<Element> gens,
                                 std::string description, long long order,
                                 std::vector<ConjugacyClass> classes,
                                 std::function<int(const Element&)> classifier) {
    auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    G->real_ = real;
    G->gens_ = std::move(gens);
    G->description_ = std::move(description);
    G->order_ = order;
    G->enumerated_ = false;
    G->classes_ = std::move(classes);
    G->classifier_ = std::move(classifier);

    long long total = 0;
    for (const auto& c : G->classes_) total += c.size;
    if (total != order) throw Error("structural group: class sizes do not sum to the order");
    return G;
}

const std::vector<Element>& FiniteGroup::elements() const {
    if (!enumerated_) throw TableUnavailable("group is structural; element set not enumerated");
    return elems_;
}

int FiniteGroup::index_of(const Element& x) const {
    if (!enumerated_) throw TableUnavailable("group is structural; element set not enumerated");
    auto it = index_.find(real_.key(real_.canon(x)));
    return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::class_of(const Element& x) const {
    if (enumerated_) {
        int i = index_of(x);
        if (i < 0) throw InvalidInput("class_of: element is not a member of the group");
        return elem_class_[i];
    }
    return classifier_(x);
}

int FiniteGroup::class_of_index(int element_index) const {
    if (!enumerated_) throw TableUnavailable("group is structural");
    return elem_class_[element_index];
}

int FiniteGroup::class_by_label(const std::string& label) const {
    for (int i = 0; i < class_count(); ++i)
        if (classes_[i].label == label) return i;
    return -1;
}

const std::vector<int>& FiniteGroup::class_members(int ci) const {
    if (!enumerated_) throw TableUnavailable("group is structural; class members unavailable");
    return class_members_[ci];
}

int FiniteGroup::class_power(int ci, unsigned long long k) const {
    const Element& rep = classes_[ci].rep;
    k %= classes_[ci].order;
    Element cur = real_.identity();
    for (unsigned long long i = 0; i < k; ++i) cur = real_.mul(cur, rep);
    return class_of(cur);
}

int FiniteGroup::inverse_class(int ci) const {
    return class_of(real_.inv(classes_[ci].rep));
}

unsigned FiniteGroup::exponent() const {
    unsigned long long e = 1;
    for (const auto& c : classes_) e = lcm_ull(e, c.order);
    return static_cast<unsigned>(e);
}

// -------------------------------------------------------------- subgroup ops

std::vector<int> subgroup_closure(const FiniteGroup& G, const std::vector<Element>& seed) {
    std::set<int> have{G.index_of(G.identity())};
    std::vector<int> gen_idx;
    for (const auto& s : seed) {
        int i = G.index_of(s);
        if (i < 0) throw NotASubgroup("seed element is not a member of the group");
        gen_idx.push_back(i);
        have.insert(i);
    }
    std::deque<int> frontier(have.begin(), have.end());
    while (!frontier.empty()) {
        int x = frontier.front();
        frontier.pop_front();
        for (int g : gen_idx) {
            Element prod = G.mul(G.elements()[x], G.elements()[g]);
            int j = G.index_of(prod);
            if (have.insert(j).second) frontier.push_back(j);
        }
    }
    return {have.begin(), have.end()};
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& indices) {
    std::set<int> s(indices.begin(), indices.end());
    for (int a : indices)
        for (int b : indices) {
            Element prod = G.mul(G.elements()[a], G.elements()[b]);
            if (!s.count(G.index_of(prod))) return false;
        }
    return true;
}

std::vector<int> conjugate_subgroup(const FiniteGroup& G, const std::vector<int>& indices,
                                    const Element& g) {
    Element gi = G.inv(g);
    std::vector<int> out;
    for (int i : indices) out.push_back(G.index_of(G.mul(G.mul(g, G.elements()[i]), gi)));
    std::sort(out.begin(), out.end());
    return out;
}

long long center_order(const FiniteGroup& G) {
    long long n = 0;
    for (const auto& x : G.elements()) {
        bool central = true;
        for (const auto& g : G.generators())
            if (!G.realization().eq(G.mul(x, g), G.mul(g, x))) {
                central = false;
                break;
            }
        if (central) ++n;
    }
    return n;
}

std::vector<int> derived_subgroup(const FiniteGroup& G) {
    // normal closure of the generator commutators
    std::vector<Element> seeds;
    for (const auto& a : G.generators())
        for (const auto& b : G.generators()) {
            Element comm = G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b)));
            seeds.push_back(comm);
        }
    std::vector<int> H = subgroup_closure(G, seeds);
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<int> have(H.begin(), H.end());
        std::vector<Element> extra;
        for (int i : H)
            for (const auto& g : G.generators()) {
                Element conj = G.mul(G.mul(g, G.elements()[i]), G.inv(g));
                if (!have.count(G.index_of(conj))) extra.push_back(conj);
            }
        if (!extra.empty()) {
            for (int i : H) extra.push_back(G.elements()[i]);
            H = subgroup_closure(G, extra);
            grew = true;
        }
    }
    return H;
}

namespace {

/// Invariant factors of an abelian group from its element-order histogram.
std::vector<long long> invariants_from_histogram(const std::map<unsigned, long long>& hist,
                                                 long long n) {
    if (n == 1) return {};
    std::map<long long, std::vector<unsigned>> p_partitions;  // prime -> partition (desc)
    for (auto [p, e] : factorize(static_cast<unsigned long long>(n))) {
        (void)e;
        // c_k = #elements with order dividing p^k
        std::vector<long long> c{1};
        for (unsigned k = 1;; ++k) {
            long long pk = 1;
            for (unsigned i = 0; i < k; ++i) pk *= (long long)p;
            long long cnt = 0;
            for (auto [d, m] : hist)
                if (pk % d == 0) cnt += m;
            c.push_back(cnt);
            if (cnt == c[c.size() - 2]) break;  // stabilized
        }
        // s_k = log_p(c_k / c_{k-1}) = #parts >= k; conjugate to get the partition
        std::vector<unsigned> s;
        for (size_t k = 1; k < c.size(); ++k) {
            long long ratio = c[k] / c[k - 1];
            unsigned cnt = 0;
            while (ratio > 1) {
                ratio /= (long long)p;
                ++cnt;
            }
            if (cnt) s.push_back(cnt);
        }
        unsigned parts = s.empty() ? 0 : s[0];
        std::vector<unsigned> lambda(parts, 0);
        for (unsigned i = 0; i < parts; ++i)
            for (unsigned k = 0; k < s.size(); ++k)
                if (s[k] >= i + 1) ++lambda[i];
        p_partitions[(long long)p] = std::move(lambda);
    }
    size_t width = 0;
    for (auto& [p, lam] : p_partitions) width = std::max(width, lam.size());
    std::vector<long long> factors(width, 1);
    for (auto& [p, lam] : p_partitions)
        for (size_t i = 0; i < lam.size(); ++i) {
            long long pe = 1;
            for (unsigned j = 0; j < lam[i]; ++j) pe *= p;
            factors[i] *= pe;
        }
    std::sort(factors.begin(), factors.end());  // ascending divisibility chain
    return factors;
}

}  // namespace

Fingerprint fingerprint(const FiniteGroup& G) {
    Fingerprint fp;
    fp.order = G.order();
    for (const auto& c : G.classes()) fp.order_histogram[c.order] += c.size;
    fp.center_order = center_order(G);

    std::vector<int> derived = derived_subgroup(G);
    fp.derived_order = (long long)derived.size();

    // order histogram of the abelianization G/[G,G]
    std::set<int> dset(derived.begin(), derived.end());
    long long qorder = G.order() / fp.derived_order;
    std::map<unsigned, long long> qhist;
    std::set<int> counted;
    for (int i = 0; i < (int)G.elements().size(); ++i) {
        if (counted.count(i)) continue;
        // coset of element i
        std::vector<int> coset;
        for (int d : derived) coset.push_back(G.index_of(G.mul(G.elements()[i], G.elements()[d])));
        for (int c : coset) counted.insert(c);
        // order of the coset in the quotient
        Element cur = G.identity();
        unsigned k = 0;
        do {
            cur = G.mul(cur, G.elements()[i]);
            ++k;
        } while (!dset.count(G.index_of(cur)));
        qhist[k] += 1;
    }
    fp.abelian_invariants = invariants_from_histogram(qhist, qorder);
    return fp;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    os << "order=" << order << " hist={";
    bool first = true;
    for (auto [d, n] : order_histogram) {
        if (!first) os << ',';
        os << d << ':' << n;
        first = false;
    }
    os << "} center=" << center_order << " ab=[";
    first = true;
    for (auto d : abelian_invariants) {
        if (!first) os << ',';
        os << d;
        first = false;
    }
    os << "] derived=" << derived_order;
    return os.str();
}

}  // namespace h1cube
