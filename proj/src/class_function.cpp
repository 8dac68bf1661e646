#include "h1cube/class_function.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "h1cube/errors.hpp"

namespace h1cube {

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
    if (a.group != b.group) throw GroupMismatch("class functions belong to different groups");
}

}  // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    ClassFunction out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    ClassFunction out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
    return out;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    ClassFunction out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
    return out;
}

ClassFunction ClassFunction::scaled(const BigRational& r) const {
    ClassFunction out = *this;
    for (auto& v : out.values) v = v.scaled(r);
    return out;
}

ClassFunction ClassFunction::conj() const {
    ClassFunction out = *this;
    for (auto& v : out.values) v = v.conj();
    return out;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group == b.group && a.values == b.values;
}

ClassFunction trivial_character(const GroupPtr& G) {
    ClassFunction f;
    f.group = G;
    f.values.assign(G->class_count(), Cyclotomic(1));
    return f;
}

ClassFunction regular_character(const GroupPtr& G) {
    ClassFunction f;
    f.group = G;
    f.values.assign(G->class_count(), Cyclotomic());
    f.values[0] = Cyclotomic(BigRational(G->order()));
    return f;
}

ClassFunction induced_trivial_character(const GroupPtr& G, const std::vector<int>& subgroup) {
    if (subgroup.empty()) throw NotASubgroup("empty subgroup");
    const long long h = (long long)subgroup.size();
    if (G->order() % h != 0) throw NotASubgroup("subgroup size does not divide the group order");
    // closure check (Lagrange makes a closed nonempty finite subset a subgroup)
    if (h < (long long)G->order()) {
        std::set<int> s(subgroup.begin(), subgroup.end());
        if ((long long)s.size() != h) throw NotASubgroup("duplicate elements in subgroup list");
        for (int a : subgroup)
            for (int b : subgroup) {
                int ab = G->index_of(G->mul(G->elements()[a], G->elements()[b]));
                if (!s.count(ab)) throw NotASubgroup("subgroup list is not closed under products");
            }
    }
    std::vector<long long> intersect(G->class_count(), 0);
    for (int i : subgroup) ++intersect[G->class_of_index(i)];
    ClassFunction f;
    f.group = G;
    f.values.reserve(G->class_count());
    BigRational index(G->order(), h);
    for (int c = 0; c < G->class_count(); ++c) {
        BigRational v = index * BigRational(intersect[c], G->classes()[c].size);
        if (!is_integer(v))
            throw Error("induced character value is not an integer (internal error)");
        f.values.emplace_back(v);
    }
    return f;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h) {
    require_same_group(f, h);
    const auto& G = *f.group;
    Cyclotomic acc;
    for (int c = 0; c < G.class_count(); ++c) {
        if (f.values[c].is_zero() || h.values[c].is_zero()) continue;
        acc += (f.values[c] * h.values[c].conj()).scaled(BigRational(G.classes()[c].size));
    }
    return acc.scaled(BigRational(1, G.order()));
}

BigRational invariant_dim_rational(const std::vector<const ClassFunction*>& fs) {
    if (fs.empty()) throw InvalidInput("invariant_dim_rational: no factors");
    const auto& G = *fs[0]->group;
    for (const auto* f : fs)
        if (f->group != fs[0]->group) throw GroupMismatch("invariant dim: group mismatch");
    Cyclotomic acc;
    for (int c = 0; c < G.class_count(); ++c) {
        Cyclotomic prod(BigRational(G.classes()[c].size));
        bool zero = false;
        for (const auto* f : fs) {
            if (f->values[c].is_zero()) {
                zero = true;
                break;
            }
            prod *= f->values[c];
        }
        if (!zero) acc += prod;
    }
    auto r = acc.scaled(BigRational(1, G.order())).try_rational();
    if (!r) throw NonIntegralResult("invariant dimension is not rational");
    return *r;
}

namespace {

long long assert_nonneg_integer(const BigRational& r, const char* what) {
    if (!is_integer(r))
        throw NonIntegralResult(std::string(what) + ": result " + to_string(r) +
                                " is not an integer (input was not a genuine character?)");
    BigInt n = numerator(r);
    if (n < 0)
        throw NonIntegralResult(std::string(what) + ": result " + to_string(r) +
                                " is negative (input was not a genuine character?)");
    return n.convert_to<long long>();
}

}  // namespace

long long tensor_power_invariant_dim(const ClassFunction& chi, unsigned n) {
    std::vector<const ClassFunction*> fs(n, &chi);
    return assert_nonneg_integer(invariant_dim_rational(fs), "tensor_power_invariant_dim");
}

long long triple_invariant_dim(const ClassFunction& f1, const ClassFunction& f2,
                               const ClassFunction& f3) {
    return assert_nonneg_integer(invariant_dim_rational({&f1, &f2, &f3}),
                                 "triple_invariant_dim");
}

long long CharacterTable::degree_of(int i) const {
    auto d = irreducibles[i].degree().try_rational();
    if (!d || !is_integer(*d)) throw TableInconsistent("irreducible degree is not an integer");
    return numerator(*d).convert_to<long long>();
}

void CharacterTable::verify() const {
    const auto& G = *group;
    const int nc = G.class_count();
    if (size() != nc) throw TableInconsistent("table must be square (#irreducibles = #classes)");
    BigInt sumsq = 0;
    for (int i = 0; i < size(); ++i) {
        long long d = degree_of(i);
        if (d <= 0 || G.order() % d != 0)
            throw TableInconsistent("irreducible degree must be positive and divide |G|");
        sumsq += BigInt(d) * d;
    }
    if (sumsq != BigInt(G.order()))
        throw TableInconsistent("sum of squared degrees does not equal |G|");
    for (int i = 0; i < size(); ++i)
        for (int j = i; j < size(); ++j) {
            Cyclotomic ip = inner_product(irreducibles[i], irreducibles[j]);
            if (ip != Cyclotomic(i == j ? 1 : 0))
                throw TableInconsistent("row orthogonality failed");
        }
    for (int c = 0; c < nc; ++c)
        for (int d = c; d < nc; ++d) {
            Cyclotomic acc;
            for (int i = 0; i < size(); ++i)
                acc += irreducibles[i].values[c] * irreducibles[i].values[d].conj();
            Cyclotomic expect =
                (c == d) ? Cyclotomic(BigRational(G.centralizer_order(c))) : Cyclotomic();
            if (acc != expect) throw TableInconsistent("column orthogonality failed");
        }
}

Decomposition decompose(const ClassFunction& chi, const CharacterTable& table,
                        bool allow_virtual) {
    if (chi.group != table.group) throw GroupMismatch("decompose: group mismatch");
    Decomposition out;
    for (const auto& irr : table.irreducibles) {
        Cyclotomic ip = inner_product(chi, irr);
        auto r = ip.try_rational();
        if (!r || !is_integer(*r))
            throw NonIntegralResult("decompose: multiplicity " + ip.str() +
                                    " is not a rational integer (not a virtual character)");
        BigInt m = numerator(*r);
        if (m < 0) {
            out.any_negative = true;
            if (!allow_virtual)
                throw NegativeMultiplicity("decompose: negative multiplicity " + to_string(m));
        }
        out.multiplicities.push_back(m);
    }
    return out;
}

ClassFunction rebuild(const Decomposition& dec, const CharacterTable& table) {
    ClassFunction acc;
    acc.group = table.group;
    acc.values.assign(table.group->class_count(), Cyclotomic());
    for (size_t i = 0; i < dec.multiplicities.size(); ++i) {
        if (dec.multiplicities[i] == 0) continue;
        ClassFunction term = table.irreducibles[i].scaled(BigRational(dec.multiplicities[i]));
        acc = acc + term;
    }
    return acc;
}

// ------------------------------------------------------------------ JSON I/O

namespace {

nlohmann::ordered_json cyclo_to_json(const Cyclotomic& v) {
    nlohmann::ordered_json j;
    j["conductor"] = v.conductor();
    std::vector<std::string> coeffs;
    for (const auto& c : v.coeffs()) coeffs.push_back(to_string(c));
    j["coeffs"] = coeffs;
    return j;
}

Cyclotomic cyclo_from_json(const nlohmann::json& j) {
    unsigned n = j.at("conductor").get<unsigned>();
    std::vector<BigRational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(rational_from_string(s.get<std::string>()));
    return Cyclotomic::from_coeffs(n, std::move(coeffs));
}

}  // namespace

std::string table_to_json_string(const CharacterTable& table) {
    const auto& G = *table.group;
    nlohmann::ordered_json j;
    j["group"] = G.description();
    j["order"] = G.order();
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (int c = 0; c < G.class_count(); ++c) {
        nlohmann::ordered_json jc;
        jc["label"] = G.classes()[c].label;
        jc["order"] = G.classes()[c].order;
        jc["size"] = G.classes()[c].size;
        jc["centralizer"] = G.centralizer_order(c);
        classes.push_back(jc);
    }
    j["classes"] = classes;
    nlohmann::ordered_json irrs = nlohmann::ordered_json::array();
    for (int i = 0; i < table.size(); ++i) {
        nlohmann::ordered_json ji;
        ji["degree"] = table.degree_of(i);
        nlohmann::ordered_json vals = nlohmann::ordered_json::array();
        for (const auto& v : table.irreducibles[i].values) vals.push_back(cyclo_to_json(v));
        ji["values"] = vals;
        irrs.push_back(ji);
    }
    j["irreducibles"] = irrs;
    return j.dump(2);
}

CharacterTable table_from_json_string(const GroupPtr& G, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("order").get<long long>() != G->order())
        throw TableInconsistent("cached table order mismatch");
    if ((int)j.at("classes").size() != G->class_count())
        throw TableInconsistent("cached table class count mismatch");
    for (int c = 0; c < G->class_count(); ++c) {
        const auto& jc = j.at("classes")[c];
        if (jc.at("label").get<std::string>() != G->classes()[c].label ||
            jc.at("size").get<long long>() != G->classes()[c].size)
            throw TableInconsistent("cached table class data mismatch");
    }
    CharacterTable table;
    table.group = G;
    for (const auto& ji : j.at("irreducibles")) {
        ClassFunction f;
        f.group = G;
        for (const auto& jv : ji.at("values")) f.values.push_back(cyclo_from_json(jv));
        if ((int)f.values.size() != G->class_count())
            throw TableInconsistent("cached table row length mismatch");
        table.irreducibles.push_back(std::move(f));
    }
    return table;
}

// ------------------------------------------------------------- memo + cache

namespace {

std::mutex g_table_mu;
std::map<const FiniteGroup*, std::shared_ptr<CharacterTable>> g_table_memo;

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_file_for(const GroupPtr& G, const std::string& spec_key) {
    const char* dir = std::getenv("H1CUBE_CACHE_DIR");
    if (!dir || !*dir) return {};
    std::ostringstream ident;
    ident << spec_key << '|' << G->description() << '|' << G->order() << '|';
    for (const auto& c : G->classes()) ident << c.label << ':' << c.size << ',';
    std::ostringstream name;
    name << std::hex << fnv1a(ident.str());
    return (std::filesystem::path(dir) / ("table_" + name.str() + ".json")).string();
}

}  // namespace

const CharacterTable& character_table_for(const GroupPtr& G, const std::string& spec_key) {
    std::lock_guard lock(g_table_mu);
    auto it = g_table_memo.find(G.get());
    if (it != g_table_memo.end()) return *it->second;

    std::string file = cache_file_for(G, spec_key);
    if (!file.empty() && std::filesystem::exists(file)) {
        std::ifstream in(file);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            auto loaded = std::make_shared<CharacterTable>(table_from_json_string(G, buf.str()));
            loaded->verify();
            return *g_table_memo.emplace(G.get(), std::move(loaded)).first->second;
        } catch (const Error&) {
            // stale cache entry; fall through and recompute
        }
    }
    auto computed = std::make_shared<CharacterTable>(dixon_character_table(G));
    if (!file.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(std::filesystem::path(file).parent_path(), ec);
        std::ofstream out(file);
        out << table_to_json_string(*computed);
    }
    return *g_table_memo.emplace(G.get(), std::move(computed)).first->second;
}

}  // namespace h1cube
