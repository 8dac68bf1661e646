#include "h1cube/spec_file.hpp"

#include <fstream>
#include <sstream>

#include "h1cube/errors.hpp"

namespace h1cube {

namespace {

struct Line {
    int number;
    std::string text;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const Line& l, const std::string& field, const std::string& value) {
    try {
        size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        fail(l.number, "field '" + field + "' expects an integer, got '" + value + "'");
    }
}

GroupSpec::Kind parse_kind(const Line& l, const std::string& value) {
    if (value == "symmetric") return GroupSpec::Kind::Symmetric;
    if (value == "cyclic") return GroupSpec::Kind::Cyclic;
    if (value == "dihedral") return GroupSpec::Kind::Dihedral;
    if (value == "perm_gens") return GroupSpec::Kind::PermGens;
    if (value == "mat_gens") return GroupSpec::Kind::MatGens;
    if (value == "pgl2") return GroupSpec::Kind::Pgl2;
    if (value == "psl2") return GroupSpec::Kind::Psl2;
    if (value == "gl2_mod") return GroupSpec::Kind::Gl2Mod;
    if (value == "direct_product") return GroupSpec::Kind::DirectProduct;
    if (value == "semidirect") return GroupSpec::Kind::Semidirect;
    if (value == "wreath2") return GroupSpec::Kind::Wreath2;
    if (value == "central_product") return GroupSpec::Kind::CentralProduct;
    fail(l.number, "unknown kind '" + value + "'");
}

// Parses lines [begin, end) into a spec; nested [factor]/[normal]/[acting]
// blocks recurse.
GroupSpec parse_block(const std::vector<Line>& lines, size_t& pos, size_t end) {
    GroupSpec spec;
    bool have_kind = false;
    std::vector<GroupSpec> factors;
    GroupSpec normal, acting;
    bool have_normal = false, have_acting = false;

    while (pos < end) {
        const Line& l = lines[pos];
        std::string t = strip(l.text);
        if (t.empty() || t[0] == '#') {
            ++pos;
            continue;
        }
        if (t[0] == '[') {
            if (t == "[factor]" || t == "[normal]" || t == "[acting]") {
                std::string closer = "[/" + t.substr(1);
                size_t depth = 1, scan = pos + 1;
                while (scan < end && depth > 0) {
                    std::string s = strip(lines[scan].text);
                    if (s.size() > 1 && s[0] == '[' && s[1] != '/') ++depth;
                    if (s.rfind("[/", 0) == 0) --depth;
                    if (depth == 0) break;
                    ++scan;
                }
                if (scan >= end) fail(l.number, "unterminated section " + t);
                size_t inner = pos + 1;
                GroupSpec sub = parse_block(lines, inner, scan);
                if (t == "[factor]")
                    factors.push_back(std::move(sub));
                else if (t == "[normal]") {
                    normal = std::move(sub);
                    have_normal = true;
                } else {
                    acting = std::move(sub);
                    have_acting = true;
                }
                pos = scan + 1;
                continue;
            }
            if (t.rfind("[/", 0) == 0) fail(l.number, "unexpected section close " + t);
            fail(l.number, "unknown section " + t);
        }
        // `act <i> <j> = word` (semidirect action rows)
        if (t.rfind("act ", 0) == 0) {
            size_t eq = t.find('=');
            if (eq == std::string::npos) fail(l.number, "act line needs '='");
            auto head = split_ws(t.substr(4, eq - 4));
            if (head.size() != 2) fail(l.number, "act line needs two indices before '='");
            size_t i = (size_t)parse_int(l, "act", head[0]);
            size_t j = (size_t)parse_int(l, "act", head[1]);
            std::vector<int> word;
            for (const auto& tok : split_ws(t.substr(eq + 1))) {
                bool inv = tok.back() == '\'';
                std::string core = inv ? tok.substr(0, tok.size() - 1) : tok;
                long long g = parse_int(l, "act word", core);
                word.push_back(inv ? -(int)g - 1 : (int)g);
            }
            if (spec.action.size() <= i) spec.action.resize(i + 1);
            if (spec.action[i].size() <= j) spec.action[i].resize(j + 1);
            spec.action[i][j] = std::move(word);
            ++pos;
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) fail(l.number, "expected 'key = value'");
        std::string key = strip(t.substr(0, eq));
        std::string value = strip(t.substr(eq + 1));
        if (key == "kind") {
            spec.kind = parse_kind(l, value);
            have_kind = true;
        } else if (key == "n" || key == "q") {
            spec.n = (unsigned)parse_int(l, key, value);
        } else if (key == "ring") {
            spec.ring = value;
        } else if (key == "projective") {
            if (value != "true" && value != "false")
                fail(l.number, "field 'projective' expects true/false");
            spec.projective = (value == "true");
        } else if (key == "gen") {
            auto toks = split_ws(value);
            if (toks.empty()) fail(l.number, "empty generator");
            std::vector<long long> nums;
            bool negative = false;
            for (const auto& tok : toks) {
                nums.push_back(parse_int(l, "gen", tok));
                negative |= nums.back() < 0;
            }
            // `kind` must precede the generators for matrix specs
            bool is_mat = (have_kind && spec.kind == GroupSpec::Kind::MatGens) || negative;
            if (is_mat) {
                if (nums.size() != 4) fail(l.number, "matrix generator needs 4 entries");
                spec.mat_gens.push_back({nums[0], nums[1], nums[2], nums[3]});
            } else {
                std::vector<uint16_t> img;
                for (long long v : nums) img.push_back((uint16_t)v);
                spec.perm_gens.push_back(std::move(img));
            }
        } else if (key == "expect.order") {
            spec.expect_order = parse_int(l, key, value);
        } else if (key == "expect.center") {
            spec.expect_center = parse_int(l, key, value);
        } else if (key == "expect.derived") {
            spec.expect_derived = parse_int(l, key, value);
        } else if (key == "expect.abelian") {
            for (auto& tok : split_ws(value)) spec.expect_abelian.push_back(parse_int(l, key, tok));
        } else if (key == "meta.id") {
            spec.meta_id = value;
        } else {
            fail(l.number, "unknown key '" + key + "'");
        }
        ++pos;
    }
    if (!have_kind) throw ParseError("missing required field 'kind'");
    switch (spec.kind) {
        case GroupSpec::Kind::DirectProduct:
        case GroupSpec::Kind::Wreath2:
        case GroupSpec::Kind::CentralProduct:
            spec.factors = std::move(factors);
            break;
        case GroupSpec::Kind::Semidirect:
            if (!have_normal || !have_acting)
                throw ParseError("semidirect requires [normal] and [acting] sections");
            spec.factors = {std::move(normal), std::move(acting)};
            break;
        default:
            if (!factors.empty() || have_normal || have_acting)
                throw ParseError("sections are only valid for product kinds");
    }
    return spec;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream is(text);
    std::string raw;
    int num = 0;
    while (std::getline(is, raw)) lines.push_back({++num, raw});
    size_t pos = 0;
    return parse_block(lines, pos, lines.size());
}

GroupSpec load_group_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group spec file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_group_spec(buf.str());
}

}  // namespace h1cube
