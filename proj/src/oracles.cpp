#include "bca/oracles.hpp"

#include <queue>
#include <tuple>

namespace bca {

namespace {

void enumerate_coeffs(const std::vector<IntVector>& images, const Int& budget, std::size_t i,
                      IntVector& acc, const Int& used,
                      const std::function<void(const IntVector&, const Int&)>& visit) {
    if (i == images.size()) {
        visit(acc, used);
        return;
    }
    // coefficient 0 first, then climb
    enumerate_coeffs(images, budget, i + 1, acc, used, visit);
    IntVector saved = acc;
    for (Int t = 1; used + t <= budget; ++t) {
        add_in_place(acc, images[i]);
        enumerate_coeffs(images, budget, i + 1, acc, used + t, visit);
    }
    acc = saved;
}

}  // namespace

std::map<IntVector, Int> oracle_image_table(const LinearMap& sigma, const Int& coeff_budget,
                                            const Int& norm_cap) {
    std::map<IntVector, Int> table;
    IntVector acc = zero_vector(sigma.codomain_dim);
    enumerate_coeffs(sigma.images, coeff_budget, 0, acc, 0,
                     [&](const IntVector& v, const Int& used) {
                         if (norm(v) > norm_cap) return;
                         auto it = table.find(v);
                         if (it == table.end())
                             table.emplace(v, used);
                         else if (used < it->second)
                             it->second = used;
                     });
    return table;
}

namespace {

bool feasible_walk(const std::vector<IntVector>& images, std::size_t i, const Int& budget,
                   IntVector& residual) {
    if (is_zero(residual)) return true;
    if (i == images.size() || budget == 0) return false;
    // try every count for image i, naively
    for (Int t = 0; t <= budget; ++t) {
        if (t > 0)
            for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= images[i][j];
        if (feasible_walk(images, i + 1, budget - t, residual)) {
            for (std::size_t j = 0; j < residual.size(); ++j) residual[j] += images[i][j] * t;
            return true;
        }
    }
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] += images[i][j] * budget;
    return false;
}

}  // namespace

bool oracle_feasible(const LinearMap& sigma, const IntVector& target, const Int& coeff_budget) {
    IntVector residual = target;
    return feasible_walk(sigma.images, 0, coeff_budget, residual);
}

std::set<IntVector> oracle_linear_members(const LinearSet& s, const Int& coeff_budget) {
    std::set<IntVector> members;
    IntVector acc = s.offset();
    enumerate_coeffs(s.periods(), coeff_budget, 0, acc, 0,
                     [&](const IntVector& v, const Int&) { members.insert(v); });
    return members;
}

std::set<IntVector> oracle_semilinear_members(const SemilinearSet& s, const Int& coeff_budget) {
    std::set<IntVector> members;
    for (const auto& c : s.components) {
        auto part = oracle_linear_members(c, coeff_budget);
        members.insert(part.begin(), part.end());
    }
    return members;
}

std::set<IntVector> oracle_star_members(const SemilinearSet& s, const Int& coeff_budget,
                                        std::size_t summands, const Int& intermediate_cap) {
    std::set<IntVector> base = oracle_semilinear_members(s, coeff_budget);
    std::set<IntVector> reached;
    reached.insert(zero_vector(s.dim));
    std::set<IntVector> frontier = reached;
    for (std::size_t k = 0; k < summands && !frontier.empty(); ++k) {
        std::set<IntVector> next;
        for (const auto& v : frontier) {
            for (const auto& b : base) {
                IntVector w = add(v, b);
                if (norm(w) > intermediate_cap) continue;
                if (reached.insert(w).second) next.insert(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return reached;
}

bool oracle_accept_paths(const BlindAutomaton& a, const Word& w, std::size_t eps_budget) {
    // BFS over (position, state, epsilon edges used, counter).
    using Config = std::tuple<std::size_t, int, std::size_t, IntVector>;
    std::set<Config> seen;
    std::queue<Config> queue;
    Config start{0, a.initial, 0, zero_vector(a.dim)};
    seen.insert(start);
    queue.push(start);
    while (!queue.empty()) {
        auto [pos, state, eps, counter] = queue.front();
        queue.pop();
        if (pos == w.size() && a.is_terminal(state) && is_zero(counter)) return true;
        for (const auto& e : a.edges) {
            if (e.src != state) continue;
            Config next;
            if (e.input) {
                if (pos == w.size() || *e.input != w[pos]) continue;
                next = {pos + 1, e.dst, eps, add(counter, e.inc)};
            } else {
                if (eps >= eps_budget) continue;
                next = {pos, e.dst, eps + 1, add(counter, e.inc)};
            }
            if (seen.insert(next).second) queue.push(next);
        }
    }
    return false;
}

std::set<IntVector> oracle_epsilon_values(const BlindAutomaton& a, int p, int q,
                                          std::size_t max_edges) {
    std::set<IntVector> values;
    std::set<std::tuple<int, IntVector, std::size_t>> seen;
    std::queue<std::tuple<int, IntVector, std::size_t>> queue;
    queue.push({p, zero_vector(a.dim), 0});
    seen.insert({p, zero_vector(a.dim), 0});
    while (!queue.empty()) {
        auto [state, counter, len] = queue.front();
        queue.pop();
        if (state == q) values.insert(counter);
        if (len == max_edges) continue;
        for (const auto& e : a.edges) {
            if (e.input || e.src != state) continue;
            std::tuple<int, IntVector, std::size_t> next{e.dst, add(counter, e.inc), len + 1};
            if (seen.insert(next).second) queue.push(next);
        }
    }
    return values;
}

std::vector<std::set<IntVector>> oracle_register_values(const BlindAutomaton& a, const Word& w,
                                                        std::size_t eps_budget) {
    std::vector<std::set<IntVector>> result(a.states.size());
    using Config = std::tuple<std::size_t, int, std::size_t, IntVector>;
    std::set<Config> seen;
    std::queue<Config> queue;
    Config start{0, a.initial, 0, zero_vector(a.dim)};
    seen.insert(start);
    queue.push(start);
    while (!queue.empty()) {
        auto [pos, state, eps, counter] = queue.front();
        queue.pop();
        if (pos == w.size()) result[static_cast<std::size_t>(state)].insert(counter);
        for (const auto& e : a.edges) {
            if (e.src != state) continue;
            Config next;
            if (e.input) {
                if (pos == w.size() || *e.input != w[pos]) continue;
                next = {pos + 1, e.dst, eps, add(counter, e.inc)};
            } else {
                if (eps >= eps_budget) continue;
                next = {pos, e.dst, eps + 1, add(counter, e.inc)};
            }
            if (seen.insert(next).second) queue.push(next);
        }
    }
    return result;
}

namespace {

bool cho_walk(const ChoAutomaton& b, const Word& w, std::size_t pos, int state,
              const IntVector& counter) {
    if (pos == w.size()) return member(b.accept_sets[static_cast<std::size_t>(state)], counter);
    for (const auto& e : b.edges) {
        if (e.src != state || e.input != w[pos]) continue;
        if (cho_walk(b, w, pos + 1, e.dst, add(counter, e.inc))) return true;
    }
    return false;
}

}  // namespace

bool oracle_cho_accept(const ChoAutomaton& b, const Word& w) {
    return cho_walk(b, w, 0, b.initial, zero_vector(b.k));
}

void for_each_word(const Alphabet& alphabet, std::size_t max_len,
                   const std::function<void(const Word&)>& visit) {
    std::vector<Word> current{{}};
    visit({});
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(current.size() * alphabet.size());
        for (const auto& w : current) {
            for (const auto& l : alphabet.letters()) {
                Word word = w;
                word.push_back(l.symbol);
                visit(word);
                next.push_back(std::move(word));
            }
        }
        current = std::move(next);
    }
}

}  // namespace bca
