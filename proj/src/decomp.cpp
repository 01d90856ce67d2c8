#include "finfish/decomp.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

#include "finfish/errors.hpp"

namespace finfish {

namespace {

// Raw halves around the maximum, not yet standardized.
std::pair<Seq, Seq> split_at_max(const Perm& p) {
    std::size_t m = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[m]) m = i;
    return {Seq(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(m)),
            Seq(p.begin() + static_cast<std::ptrdiff_t>(m) + 1, p.end())};
}

void require_2ssp_or_empty(const Perm& p, const char* who) {
    if (p.empty()) return;
    if (!is_two_stack_sortable(p))
        throw domain_error(std::string(who) + ": argument is not two-stack sortable");
}

}  // namespace

std::pair<Perm, Perm> decompose(const Perm& p) {
    require_perm(p);
    if (p.empty()) throw domain_error("decompose: the empty permutation has no decomposition");
    if (!is_two_stack_sortable(p)) throw domain_error("decompose: not two-stack sortable");
    auto [pl, pr] = split_at_max(p);
    return {standardize(pl), standardize(pr)};
}

DecompKind classify(const Perm& p) {
    require_perm(p);
    if (p.empty()) throw invalid_input("classify: empty permutation");
    auto [pl, pr] = split_at_max(p);
    if (pl.empty() || pr.empty()) return {CKind::C1, 0};

    value_t rmin = *std::min_element(pr.begin(), pr.end());
    int large = 0;
    for (value_t e : pl)
        if (e > rmin) ++large;
    if (large == 0) return {CKind::C1, 0};
    if (large > 1)
        throw inconsistency_error("classify: " + std::to_string(large) +
                                  " left entries exceed the right minimum");

    // The one large entry is max(pl); its witness is the largest right entry
    // below it, and that witness must standardize to a left-to-right maximum
    // of S(p2).
    value_t m = *std::max_element(pl.begin(), pl.end());
    value_t witness = 0;
    bool found = false;
    for (value_t e : pr)
        if (e < m && (!found || e > witness)) {
            witness = e;
            found = true;
        }
    Perm p2 = standardize(pr);
    value_t witness_std = 0;
    for (std::size_t idx = 0; idx < pr.size(); ++idx)
        if (pr[idx] == witness) witness_std = p2[idx];

    auto lrm = left_to_right_maxima(stack_sort(p2));
    for (std::size_t r = 0; r < lrm.size(); ++r)
        if (lrm[r] == witness_std) return {CKind::C2, static_cast<int>(r + 1)};
    throw inconsistency_error("classify: witness " + std::to_string(witness_std) +
                              " is not a left-to-right maximum of the sorted right part");
}

Perm construct_c1(const Perm& p1, const Perm& p2) {
    require_perm(p1);
    require_perm(p2);
    require_2ssp_or_empty(p1, "construct_c1");
    require_2ssp_or_empty(p2, "construct_c1");
    const value_t k = static_cast<value_t>(p1.size());
    const value_t l = static_cast<value_t>(p2.size());
    Perm out = p1;
    out.reserve(p1.size() + p2.size() + 1);
    out.push_back(k + l + 1);
    for (value_t x : shift_uniform(p2, k)) out.push_back(x);
    return out;
}

Perm construct_c2(const Perm& p1, const Perm& p2, int i) {
    require_perm(p1);
    require_perm(p2);
    if (p1.empty() || p2.empty()) throw invalid_input("construct_c2: arguments must be nonempty");
    require_2ssp_or_empty(p1, "construct_c2");
    require_2ssp_or_empty(p2, "construct_c2");
    auto lrm = left_to_right_maxima(stack_sort(p2));
    if (i < 1 || static_cast<std::size_t>(i) > lrm.size())
        throw invalid_input("construct_c2: index " + std::to_string(i) + " outside 1.." +
                            std::to_string(lrm.size()));
    const value_t k = static_cast<value_t>(p1.size());
    const value_t l = static_cast<value_t>(p2.size());
    const value_t a = lrm[static_cast<std::size_t>(i - 1)];

    // Only the maximum of p1 jumps, landing just above the witness a.
    Perm out = shift_split(p1, 0, k, a);
    out.reserve(p1.size() + p2.size() + 1);
    out.push_back(k + l + 1);
    for (value_t x : shift_split(p2, k - 1, a + 1, k)) out.push_back(x);
    return out;
}

namespace {

int build_tree(const Perm& p, DecompTree& t) {
    if (p.empty()) return -1;
    DecompKind kind = classify(p);
    auto [pl, pr] = split_at_max(p);
    int left = build_tree(standardize(pl), t);
    int right = build_tree(standardize(pr), t);
    t.nodes.push_back({kind, left, right});
    return static_cast<int>(t.nodes.size()) - 1;
}

}  // namespace

DecompTree tree_of_perm(const Perm& p) {
    require_perm(p);
    if (!p.empty() && !is_two_stack_sortable(p))
        throw domain_error("tree_of_perm: not two-stack sortable");
    DecompTree t;
    t.root = build_tree(p, t);
    return t;
}

namespace {

Perm eval_tree(const DecompTree& t, int node, std::vector<char>& seen) {
    if (node < 0) return {};
    if (node >= static_cast<int>(t.nodes.size()))
        throw invalid_tree("node index " + std::to_string(node) + " out of range");
    if (seen[static_cast<std::size_t>(node)])
        throw invalid_tree("node " + std::to_string(node) + " reached twice");
    seen[static_cast<std::size_t>(node)] = 1;
    const auto& nd = t.nodes[static_cast<std::size_t>(node)];
    Perm l = eval_tree(t, nd.left, seen);
    Perm r = eval_tree(t, nd.right, seen);
    if (nd.kind.tag == CKind::C1) return construct_c1(l, r);
    if (l.empty() || r.empty()) throw invalid_tree("C2 node with an empty child");
    int bound = stats(r).slmax;
    if (nd.kind.i < 1 || nd.kind.i > bound)
        throw invalid_tree("C2 index " + std::to_string(nd.kind.i) + " outside 1.." +
                           std::to_string(bound));
    return construct_c2(l, r, nd.kind.i);
}

}  // namespace

Perm perm_of_tree(const DecompTree& t) {
    if (t.root >= 0 && t.root >= static_cast<int>(t.nodes.size()))
        throw invalid_tree("root index out of range");
    std::vector<char> seen(t.nodes.size(), 0);
    return eval_tree(t, t.root, seen);
}

namespace {

void print_tree(const DecompTree& t, int node, std::ostringstream& os) {
    if (node < 0) {
        os << 'E';
        return;
    }
    const auto& nd = t.nodes[static_cast<std::size_t>(node)];
    os << '(';
    if (nd.kind.tag == CKind::C1)
        os << "C1";
    else
        os << "C2:" << nd.kind.i;
    os << ' ';
    print_tree(t, nd.left, os);
    os << ' ';
    print_tree(t, nd.right, os);
    os << ')';
}

struct TreeParser {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw invalid_input("tree parse: " + what + " at position " + std::to_string(i));
    }

    int parse_node(DecompTree& t, int depth) {
        if (depth > 10000) fail("nesting too deep");
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        if (s[i] == 'E') {
            ++i;
            return -1;
        }
        if (s[i] != '(') fail("expected 'E' or '('");
        ++i;
        skip_ws();
        if (i + 1 >= s.size() || s[i] != 'C' || (s[i + 1] != '1' && s[i + 1] != '2'))
            fail("expected 'C1' or 'C2'");
        DecompKind kind;
        kind.tag = s[i + 1] == '1' ? CKind::C1 : CKind::C2;
        i += 2;
        if (kind.tag == CKind::C2) {
            if (i >= s.size() || s[i] != ':') fail("expected ':' after 'C2'");
            ++i;
            std::size_t digits = 0;
            long v = 0;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
                v = v * 10 + (s[i] - '0');
                if (v > 1000000) fail("index too large");
                ++i;
                ++digits;
            }
            if (digits == 0) fail("expected an index after 'C2:'");
            kind.i = static_cast<int>(v);
        }
        int left = parse_node(t, depth + 1);
        int right = parse_node(t, depth + 1);
        skip_ws();
        if (i >= s.size() || s[i] != ')') fail("expected ')'");
        ++i;
        t.nodes.push_back({kind, left, right});
        return static_cast<int>(t.nodes.size()) - 1;
    }
};

}  // namespace

std::string tree_to_string(const DecompTree& t) {
    std::ostringstream os;
    print_tree(t, t.root, os);
    return os.str();
}

DecompTree tree_from_string(const std::string& text) {
    DecompTree t;
    TreeParser p{text};
    t.root = p.parse_node(t, 0);
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing characters");
    return t;
}

}  // namespace finfish
