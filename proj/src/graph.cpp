#include "taut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace taut {

bool validate_indices(int g, int n, StabilityMode mode) {
    if (g < 0 || n < 0) return false;
    bool stable = 2 * g - 2 + n > 0;
    if (mode == StabilityMode::Stable) return stable;
    return stable && g + n > 2;
}

bool root_vertex_stable(int g, int n, int k) {
    if (k == 0) return validate_indices(g, n, StabilityMode::Stable);
    return 2 * (g - k) - 2 + (n + k) > 0;
}

void check_structure(const TailGraph& graph) {
    if (graph.g < 0 || graph.n < 0 || graph.k < 0 || graph.k > graph.g)
        throw std::invalid_argument("TailGraph: need 0 <= k <= g, n >= 0");
    if (static_cast<int>(graph.root.leg_psi.size()) != graph.n)
        throw std::invalid_argument("TailGraph: leg_psi size must equal n");
    if (static_cast<int>(graph.root.star_psi.size()) != graph.k)
        throw std::invalid_argument("TailGraph: star_psi size must equal k");
    if (static_cast<int>(graph.tails.size()) != graph.k)
        throw std::invalid_argument("TailGraph: tails size must equal k");
    for (int j : graph.root.lambda)
        if (j < 1 || j > graph.root_genus())
            throw std::invalid_argument("TailGraph: root lambda index exceeds root genus");
    if (!root_vertex_stable(graph.g, graph.n, graph.k))
        throw std::invalid_argument("TailGraph: unstable root vertex");
}

TailGraph canonicalize(TailGraph graph) {
    std::sort(graph.root.lambda.begin(), graph.root.lambda.end());
    std::sort(graph.root.big_lambda.begin(), graph.root.big_lambda.end());
    for (auto& t : graph.tails) std::sort(t.big_lambda.begin(), t.big_lambda.end());

    // Permuting a tail slot together with its star exponent leaves the
    // pushforward class unchanged, so slots sort by (tail, star) pairs.
    std::vector<std::pair<TailDecoration, int>> slots(graph.k);
    for (int j = 0; j < graph.k; ++j) slots[j] = {graph.tails[j], graph.root.star_psi[j]};
    std::sort(slots.begin(), slots.end());
    for (int j = 0; j < graph.k; ++j) {
        graph.tails[j] = slots[j].first;
        graph.root.star_psi[j] = slots[j].second;
    }
    return graph;
}

int term_codim(const TailGraph& graph) {
    if (!graph.root.big_lambda.empty())
        throw std::logic_error("term_codim: symbolic Lambda factors on root");
    int c = graph.k;
    c += std::accumulate(graph.root.leg_psi.begin(), graph.root.leg_psi.end(), 0);
    c += std::accumulate(graph.root.star_psi.begin(), graph.root.star_psi.end(), 0);
    c += std::accumulate(graph.root.lambda.begin(), graph.root.lambda.end(), 0);
    for (const auto& t : graph.tails) {
        if (!t.big_lambda.empty())
            throw std::logic_error("term_codim: symbolic Lambda factors on tail");
        c += t.bullet_psi + t.lambda1;
    }
    return c;
}

void GraphSum::add_term(const TailGraph& graph, const Rational& coeff) {
    if (coeff.is_zero()) return;
    if (graph.g != g_ || graph.n != n_)
        throw std::invalid_argument("GraphSum: ambient (g, n) mismatch");
    TailGraph key = canonicalize(graph);
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GraphSum& GraphSum::operator+=(const GraphSum& other) {
    if (other.g_ != g_ || other.n_ != n_)
        throw std::invalid_argument("GraphSum: ambient (g, n) mismatch");
    for (const auto& [graph, coeff] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(graph, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

GraphSum& GraphSum::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [graph, coeff] : terms_) coeff *= c;
    return *this;
}

GraphSum graphsum_add(const GraphSum& a, const GraphSum& b) { return a + b; }
GraphSum graphsum_scale(const GraphSum& a, const Rational& c) { return a * c; }

}  // namespace taut
