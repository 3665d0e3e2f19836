#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "khv/diagram.hpp"

namespace khv::testsupport {

/// PD code for the closure of a braid word on `strands` strands.  A letter
/// (i, sign) is the generator acting on positions i, i+1 (0-based); for a
/// positive letter the over-strand runs from top-right to bottom-left, which
/// makes the crossing positive.  Strands without crossings close into free
/// loops and are emitted as `U` terms.
inline std::string braid_closure_pd(int strands, const std::vector<std::pair<int, int>>& word) {
    struct Passage {
        int in, out;
    };
    struct Xing {
        int tl, tr, bl, br;
        bool positive;
    };

    std::vector<int> cur(static_cast<size_t>(strands));
    std::vector<bool> touched(static_cast<size_t>(strands), false);
    for (int p = 0; p < strands; ++p) cur[static_cast<size_t>(p)] = p;
    int next_arc = strands;

    std::vector<Xing> xings;
    for (const auto& [i, sign] : word) {
        Xing x;
        x.tl = cur[static_cast<size_t>(i)];
        x.tr = cur[static_cast<size_t>(i) + 1];
        x.bl = next_arc++;
        x.br = next_arc++;
        x.positive = sign > 0;
        xings.push_back(x);
        cur[static_cast<size_t>(i)] = x.bl;
        cur[static_cast<size_t>(i) + 1] = x.br;
        touched[static_cast<size_t>(i)] = touched[static_cast<size_t>(i) + 1] = true;
    }

    // Closure: the bottom arc at each position is the top arc again.
    std::map<int, int> alias;
    int free_loops = 0;
    for (int p = 0; p < strands; ++p) {
        if (!touched[static_cast<size_t>(p)]) {
            ++free_loops;
            continue;
        }
        alias[cur[static_cast<size_t>(p)]] = p;
    }
    auto resolve = [&](int a) {
        auto it = alias.find(a);
        return it == alias.end() ? a : it->second;
    };

    // Arc successors along the orientation (top to bottom through passages).
    std::map<int, int> succ;
    for (const auto& x : xings) {
        const Passage under = x.positive ? Passage{x.tl, x.br} : Passage{x.tr, x.bl};
        const Passage over = x.positive ? Passage{x.tr, x.bl} : Passage{x.tl, x.br};
        succ[resolve(under.in)] = resolve(under.out);
        succ[resolve(over.in)] = resolve(over.out);
    }

    // Trace cycles and hand out edge labels in flow order, so the labels
    // satisfy the PD succession convention by construction.
    std::map<int, int> label;
    int next_label = 1;
    for (const auto& [start, unused] : succ) {
        if (label.count(start)) continue;
        int a = start;
        while (!label.count(a)) {
            label[a] = next_label++;
            a = succ.at(a);
        }
    }

    std::string pd;
    for (const auto& x : xings) {
        const int tl = label.at(resolve(x.tl)), tr = label.at(resolve(x.tr));
        const int bl = label.at(resolve(x.bl)), br = label.at(resolve(x.br));
        // counterclockwise from the incoming under-strand
        const std::array<int, 4> t = x.positive ? std::array<int, 4>{tl, bl, br, tr}
                                                : std::array<int, 4>{tr, tl, bl, br};
        if (!pd.empty()) pd += " ";
        pd += "X(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "," +
              std::to_string(t[3]) + ")";
    }
    for (int k = 0; k < free_loops; ++k) {
        if (!pd.empty()) pd += " ";
        pd += "U";
    }
    return pd;
}

/// A random valid diagram with at most `max_crossings` crossings.  Braid
/// closures are always planar; the rare orientation-ambiguous word (a
/// two-edge component lying entirely over) is regenerated.
inline khv::Diagram random_diagram(std::mt19937& rng, int max_crossings) {
    for (;;) {
        std::uniform_int_distribution<int> n_strands(2, 4);
        const int strands = n_strands(rng);
        std::uniform_int_distribution<int> n_letters(1, max_crossings);
        const int letters = n_letters(rng);
        std::uniform_int_distribution<int> pos(0, strands - 2);
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<std::pair<int, int>> word;
        word.reserve(static_cast<size_t>(letters));
        for (int k = 0; k < letters; ++k) word.emplace_back(pos(rng), coin(rng) ? 1 : -1);
        try {
            return khv::Diagram::parse_pd(braid_closure_pd(strands, word));
        } catch (const khv::OrientationConflict&) {
            continue;
        }
    }
}

}  // namespace khv::testsupport
