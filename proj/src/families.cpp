#include "hamc/families.hpp"

#include <algorithm>
#include <cmath>

#include "hamc/errors.hpp"

namespace hamc {

PathFamily cfk_family(int n) {
    if (n < 3) throw precondition_error("cfk_family: n must be >= 3");
    if (n % 2 == 0) {
        PathFamily base = cfk_family(n - 1);
        PathFamily out(n, false);
        for (const auto& p : base.paths()) {
            std::vector<int> order = p.order();
            order.push_back(n - 1);
            out.add(HamPath(std::move(order), false));
        }
        return out;
    }
    std::vector<int> odd_labels;
    for (int v = 1; v < n; v += 2) odd_labels.push_back(v);
    PathFamily out(n, false);
    std::vector<int> perm = odd_labels;
    do {
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            order[static_cast<std::size_t>(i)] =
                (i % 2 == 0) ? i : perm[static_cast<std::size_t>(i / 2)];
        }
        out.add(HamPath(std::move(order), false));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

void recursive_fill(std::vector<int>& slots, std::vector<int>& remaining, PathFamily& out) {
    std::vector<int> stars;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i] == -1) stars.push_back(static_cast<int>(i));

    if (stars.empty()) {
        out.add(HamPath(slots, false));
        return;
    }

    bool consecutive = true;
    for (std::size_t k = 0; k + 1 < stars.size(); ++k)
        if (stars[k + 1] != stars[k] + 1) consecutive = false;

    if (consecutive && stars.size() >= 2) {
        // Deterministic step: smallest unused vertex goes just right of the
        // leftmost blank.
        int pos = stars[1];
        int v = remaining.front();
        slots[static_cast<std::size_t>(pos)] = v;
        remaining.erase(remaining.begin());
        recursive_fill(slots, remaining, out);
        remaining.insert(remaining.begin(), v);
        slots[static_cast<std::size_t>(pos)] = -1;
        return;
    }

    // Branching step: every unused vertex may take the leftmost blank.
    int pos = stars[0];
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
        int v = remaining[idx];
        slots[static_cast<std::size_t>(pos)] = v;
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
        recursive_fill(slots, remaining, out);
        remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(idx), v);
        slots[static_cast<std::size_t>(pos)] = -1;
    }
}

} // namespace

PathFamily recursive_c4_family(int n) {
    if (n < 3) throw precondition_error("recursive_c4_family: n must be >= 3");
    std::vector<int> slots(static_cast<std::size_t>(n), -1);
    slots[0] = 0;
    slots[2] = 1;
    std::vector<int> remaining;
    for (int v = 2; v < n; ++v) remaining.push_back(v);
    PathFamily out(n, false);
    recursive_fill(slots, remaining, out);
    return out;
}

PathFamily tricolor_family(int n) {
    if (n < 3) throw precondition_error("tricolor_family: n must be >= 3");
    const int c1 = (n + 2) / 3;
    const int c3 = n / 3;
    const int c2 = n - c1 - c3;

    std::vector<std::vector<int>> classes(3);
    for (int v = 0; v < c1; ++v) classes[0].push_back(v);
    for (int v = c1; v < c1 + c2; ++v) classes[1].push_back(v);
    for (int v = c1 + c2; v < n; ++v) classes[2].push_back(v);

    // Slot lists per colour: position j gets colour j mod 3, and the slot
    // counts match the class sizes by construction.
    std::vector<std::vector<int>> slots(3);
    for (int j = 0; j < n; ++j) slots[static_cast<std::size_t>(j % 3)].push_back(j);

    PathFamily out(n, true);
    std::vector<int> p0 = classes[0], p1 = classes[1], p2 = classes[2];
    std::vector<int> order(static_cast<std::size_t>(n));
    do {
        do {
            do {
                for (std::size_t k = 0; k < p0.size(); ++k)
                    order[static_cast<std::size_t>(slots[0][k])] = p0[k];
                for (std::size_t k = 0; k < p1.size(); ++k)
                    order[static_cast<std::size_t>(slots[1][k])] = p1[k];
                for (std::size_t k = 0; k < p2.size(); ++k)
                    order[static_cast<std::size_t>(slots[2][k])] = p2[k];
                out.add(HamPath(order, true));
            } while (std::next_permutation(p2.begin(), p2.end()));
        } while (std::next_permutation(p1.begin(), p1.end()));
    } while (std::next_permutation(p0.begin(), p0.end()));
    return out;
}

std::vector<PartialWord> base_reversing_family(int n) {
    if (n < 3) throw precondition_error("base_reversing_family: n must be >= 3");
    if (n == 3) {
        return {PartialWord({0, 1, 2}, 3)};
    }
    // The four gadgets, 0-based, each omitting one symbol of its window.
    static constexpr int kPattern[4][3] = {{0, 1, 2}, {2, 3, 0}, {1, 0, 3}, {3, 2, 1}};
    static constexpr int kLeftover[4] = {3, 1, 2, 0};

    const int blocks = n / 3;
    const int tail = n - 3 * blocks;
    const int alphabet = std::max(n, 4 * blocks);

    std::vector<PartialWord> out;
    std::vector<int> choice(static_cast<std::size_t>(blocks), 0);
    while (true) {
        std::vector<int> word(static_cast<std::size_t>(n), PartialWord::kBlank);
        std::vector<int> pool;
        for (int b = 0; b < blocks; ++b) {
            int c = choice[static_cast<std::size_t>(b)];
            for (int k = 0; k < 3; ++k)
                word[static_cast<std::size_t>(3 * b + k)] = 4 * b + kPattern[c][k];
            pool.push_back(4 * b + kLeftover[c]);
        }
        for (int s = 4 * blocks; s < alphabet; ++s) pool.push_back(s);
        std::sort(pool.begin(), pool.end());
        for (int k = 0; k < tail; ++k)
            word[static_cast<std::size_t>(3 * blocks + k)] = pool[static_cast<std::size_t>(k)];
        out.emplace_back(std::move(word), alphabet);

        // Odometer over gadget choices, leftmost block slowest.
        int b = blocks - 1;
        while (b >= 0 && choice[static_cast<std::size_t>(b)] == 3) {
            choice[static_cast<std::size_t>(b)] = 0;
            --b;
        }
        if (b < 0) break;
        ++choice[static_cast<std::size_t>(b)];
    }
    return out;
}

PathFamily k24_paths_from_reversing(const std::vector<PartialWord>& perms) {
    if (perms.empty())
        throw precondition_error("k24_paths_from_reversing: empty input");
    const int m = perms.front().length();
    for (const auto& w : perms) {
        if (w.length() != m || !w.is_permutation())
            throw precondition_error(
                "k24_paths_from_reversing: inputs are not permutations of a common ground set");
    }
    // ids: spine 0..2m, fixed tops 2m+1..3m, selectable tops 3m+1..4m.
    PathFamily out(4 * m + 1, false);
    for (const auto& w : perms) {
        std::vector<int> order(static_cast<std::size_t>(4 * m + 1));
        for (int k = 0; k <= 2 * m; ++k) order[static_cast<std::size_t>(2 * k)] = k;
        for (int j = 1; j <= 2 * m; ++j) {
            int id = (j % 2 == 1) ? 2 * m + (j + 1) / 2 : 3 * m + 1 + w.at(j / 2 - 1);
            order[static_cast<std::size_t>(2 * j - 1)] = id;
        }
        out.add(HamPath(std::move(order), false));
    }
    return out;
}

PathFamily tripartite_family(int n) {
    if (n < 3) throw precondition_error("tripartite_family: n must be >= 3");
    const int c1 = (n + 2) / 3;
    const int c3 = n / 3;
    const int c2 = n - c1 - c3;
    const int sizes[3] = {c1, c2, c3};

    std::vector<std::vector<int>> parts(3);
    for (int v = 0; v < c1; ++v) parts[0].push_back(v);
    for (int v = c1; v < c1 + c2; ++v) parts[1].push_back(v);
    for (int v = c1 + c2; v < n; ++v) parts[2].push_back(v);

    PathFamily out(n, true);
    for (int start = 0; start < 3; ++start) {
        // Position j carries part (start + j) mod 3; the start is feasible
        // iff every part's slot count equals its size.
        int slot_count[3] = {0, 0, 0};
        std::vector<std::vector<int>> slots(3);
        for (int j = 0; j < n; ++j) {
            int part = (start + j) % 3;
            ++slot_count[part];
            slots[static_cast<std::size_t>(part)].push_back(j);
        }
        if (slot_count[0] != sizes[0] || slot_count[1] != sizes[1] || slot_count[2] != sizes[2])
            continue;

        std::vector<int> p0 = parts[0], p1 = parts[1], p2 = parts[2];
        std::vector<int> order(static_cast<std::size_t>(n));
        do {
            do {
                do {
                    for (std::size_t k = 0; k < p0.size(); ++k)
                        order[static_cast<std::size_t>(slots[0][k])] = p0[k];
                    for (std::size_t k = 0; k < p1.size(); ++k)
                        order[static_cast<std::size_t>(slots[1][k])] = p1[k];
                    for (std::size_t k = 0; k < p2.size(); ++k)
                        order[static_cast<std::size_t>(slots[2][k])] = p2[k];
                    out.add(HamPath(order, true));
                } while (std::next_permutation(p2.begin(), p2.end()));
            } while (std::next_permutation(p1.begin(), p1.end()));
        } while (std::next_permutation(p0.begin(), p0.end()));
    }
    return out;
}

ProductBound product_lower_bound(int n) {
    if (n < 3) throw precondition_error("product_lower_bound: n must be >= 3");
    ProductBound out;
    out.value = 1;
    out.log_value = 0.0;
    for (int i = 1; 2 * i <= n - 1; ++i) {
        out.value *= n - 2 * i;
        out.log_value += std::log(static_cast<double>(n - 2 * i));
    }
    out.reference_log = 0.5 * n * (std::log(static_cast<double>(n)) - 1.0);
    return out;
}

} // namespace hamc
