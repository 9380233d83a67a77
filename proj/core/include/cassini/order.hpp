#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cassini {

enum class NodeKind : unsigned char { Transmitter, Receiver };

constexpr NodeKind opposite(NodeKind k) {
    return k == NodeKind::Transmitter ? NodeKind::Receiver : NodeKind::Transmitter;
}
constexpr char kind_letter(NodeKind k) { return k == NodeKind::Transmitter ? 'T' : 'R'; }

/// Left-to-right node kinds on a barrier, excluding the implicit end nodes H_l and H_r.
using Order = std::vector<NodeKind>;

/// Parses "RTRRRT" or "R T RRR T"; whitespace is ignored. Throws InputError.
Order parse_order(std::string_view text);
/// Runs separated by single spaces, e.g. "R T RRR T RRR T R".
std::string format_order(const Order& order);
/// Exchanges every T with R.
Order flipped(const Order& order);
std::size_t count_kind(const Order& order, NodeKind kind);

/// True iff the order holds both kinds and contains none of the swap-reducible
/// patterns (T,T,R,R), (R,R,T,T), (T,T,R,H_r), (R,R,T,H_r), (H_l,T,R,R), (H_l,R,T,T).
bool is_candidate_order(const Order& order);

enum class Pattern : unsigned char {
    /// (H_l, Y^k, X): run touching the left end, k >= 1.
    EndLeft,
    /// (X, Y^k, H_r): run touching the right end, k >= 1.
    EndRight,
    /// (X, Y^k, X) with k >= 2.
    Interior,
    /// (X, Y) of two simple nodes.
    Pair,
};

/// A local suborder of a candidate order. Nodes are addressed in the padded
/// sequence (H_l, S_1, ..., S_J, H_r), so H_l = 0 and H_r = J + 1; spacing i
/// separates padded nodes i and i + 1.
struct LocalSuborder {
    Pattern pattern = Pattern::Pair;
    /// Length of the inner run (0 for Pair).
    std::size_t k = 0;
    std::size_t first_node = 0;
    std::size_t last_node = 0;

    std::size_t first_spacing() const { return first_node; }
    std::size_t spacing_count() const { return last_node - first_node; }

    friend bool operator==(const LocalSuborder&, const LocalSuborder&) = default;
};

/// Throws InputError unless the pattern/k combination is legal.
void validate_suborder(const LocalSuborder& sub);

struct SuborderDecomposition {
    std::vector<LocalSuborder> suborders;
    std::size_t node_count = 0;  // J
};

/// Splits a candidate order into local suborders via its super order: the first
/// and last suborders are EndLeft/EndRight, interior ones Interior or Pair, and
/// consecutive suborders share their boundary node. For two-run orders such as
/// (T,R) the two end suborders overlap on the middle spacing.
/// Throws InputError for non-candidate orders.
SuborderDecomposition decompose(const Order& order);

}  // namespace cassini
