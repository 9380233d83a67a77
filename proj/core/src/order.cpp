#include "cassini/order.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "cassini/error.hpp"

namespace cassini {

namespace {

// Padded symbols: end nodes get their own letters so anchored patterns match only at the ends.
constexpr char kLeftEnd = 'L';
constexpr char kRightEnd = 'H';

struct Run {
    NodeKind kind;
    std::size_t length;
    std::size_t first;  // padded index of the first node in the run
};

std::vector<Run> runs_of(const Order& order) {
    std::vector<Run> runs;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!runs.empty() && runs.back().kind == order[i]) {
            ++runs.back().length;
        } else {
            runs.push_back({order[i], 1, i + 1});
        }
    }
    return runs;
}

}  // namespace

Order parse_order(std::string_view text) {
    Order order;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        switch (ch) {
            case 'T':
            case 't':
                order.push_back(NodeKind::Transmitter);
                break;
            case 'R':
            case 'r':
                order.push_back(NodeKind::Receiver);
                break;
            default:
                throw InputError(std::string("unexpected character '") + ch + "' in order; expected T or R");
        }
    }
    return order;
}

std::string format_order(const Order& order) {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && order[i] != order[i - 1]) out.push_back(' ');
        out.push_back(kind_letter(order[i]));
    }
    return out;
}

Order flipped(const Order& order) {
    Order out(order.size());
    std::transform(order.begin(), order.end(), out.begin(), opposite);
    return out;
}

std::size_t count_kind(const Order& order, NodeKind kind) {
    return static_cast<std::size_t>(std::count(order.begin(), order.end(), kind));
}

bool is_candidate_order(const Order& order) {
    if (count_kind(order, NodeKind::Transmitter) == 0 || count_kind(order, NodeKind::Receiver) == 0) return false;

    std::string padded(1, kLeftEnd);
    for (NodeKind k : order) padded.push_back(kind_letter(k));
    padded.push_back(kRightEnd);

    static constexpr std::array<std::string_view, 6> kForbidden = {"TTRR", "RRTT", "TTRH", "RRTH", "LTRR", "LRTT"};
    return std::none_of(kForbidden.begin(), kForbidden.end(),
                        [&](std::string_view p) { return padded.find(p) != std::string::npos; });
}

void validate_suborder(const LocalSuborder& sub) {
    const bool ok = [&] {
        switch (sub.pattern) {
            case Pattern::EndLeft:
            case Pattern::EndRight:
                return sub.k >= 1 && sub.spacing_count() == sub.k + 1;
            case Pattern::Interior:
                return sub.k >= 2 && sub.spacing_count() == sub.k + 1;
            case Pattern::Pair:
                return sub.k == 0 && sub.spacing_count() == 1;
        }
        return false;
    }();
    if (!ok) throw InputError("illegal local suborder pattern/k combination");
}

SuborderDecomposition decompose(const Order& order) {
    if (!is_candidate_order(order)) {
        throw InputError("order '" + format_order(order) + "' is not a candidate order");
    }
    const auto runs = runs_of(order);
    const std::size_t m = runs.size();
    const std::size_t right_end = order.size() + 1;

    SuborderDecomposition out;
    out.node_count = order.size();

    // Candidate orders have at least two runs, and the second and second-to-last runs are simple nodes.
    const Run& first = runs.front();
    out.suborders.push_back({Pattern::EndLeft, first.length, 0, first.first + first.length});

    // Interior suborders walk from the node of run 2 to the node of run m-1.
    std::size_t cursor = runs[1].first;
    for (std::size_t i = 2; i + 1 < m; ++i) {
        const Run& run = runs[i];
        if (run.length >= 2) {
            const std::size_t end = run.first + run.length;  // the simple node after the super node
            out.suborders.push_back({Pattern::Interior, run.length, cursor, end});
            cursor = end;
            ++i;  // the next run is that simple node
        } else {
            out.suborders.push_back({Pattern::Pair, 0, cursor, run.first});
            cursor = run.first;
        }
    }

    const Run& last = runs.back();
    out.suborders.push_back({Pattern::EndRight, last.length, last.first - 1, right_end});
    return out;
}

}  // namespace cassini
