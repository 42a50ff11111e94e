#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chevalg/rootdatum.hpp"

namespace chevalg {

inline std::vector<Weight> hilbert_cone_generators(const RootDatum& rd, long box = 6);

/// Parse a root-datum config:
/// {"rank": r, "pairing": [[..]], "simple_Y": [[..]], "simple_X": [[..]],
///  "dot": [[..]], "cone_gens": [[..]] (optional), "name": "..." (optional)}
inline RootDatum RootDatum::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidDatum(std::string("config parse error: ") + e.what());
    }
    auto mat = [&](const char* key) {
        std::vector<std::vector<long>> m;
        if (!j.contains(key)) throw InvalidDatum(std::string("missing key: ") + key);
        for (const auto& row : j.at(key)) m.push_back(row.get<std::vector<long>>());
        return m;
    };
    RootDatum rd;
    if (!j.contains("rank")) throw InvalidDatum("missing key: rank");
    rd.rank = j.at("rank").get<int>();
    rd.pairing = mat("pairing");
    rd.simple_Y = mat("simple_Y");
    rd.simple_X = mat("simple_X");
    rd.dot = mat("dot");
    if (j.contains("cone_gens")) rd.cone_gens = mat("cone_gens");
    rd.name = j.value("name", "custom");
    rd.validate();
    if (rd.cone_gens.empty()) rd.cone_gens = hilbert_cone_generators(rd);
    return rd;
}

inline RootDatum RootDatum::load(const std::string& preset_or_path) {
    for (const auto& p : preset_names())
        if (p == preset_or_path) return preset(preset_or_path);
    std::ifstream in(preset_or_path);
    if (!in) throw InvalidDatum("unknown preset and unreadable path: " + preset_or_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

/// Bounded Hilbert-basis enumeration for the dominant monoid X^+ when a
/// config does not list generators. Searches dominant weights inside a
/// coordinate box, keeps the ones that are not sums of two nonzero dominant
/// elements, then verifies that every dominant weight in a test window is an
/// N-combination of the chosen generators. Fails loudly if the box is too
/// small rather than guessing.
inline std::vector<Weight> hilbert_cone_generators(const RootDatum& rd, long box) {
    std::vector<Weight> dominants;
    Weight cur(rd.rank, -box);
    while (true) {
        if (rd.is_dominant(cur) && !weight_is_zero(cur)) dominants.push_back(cur);
        int k = 0;
        while (k < rd.rank && cur[k] == box) cur[k++] = -box;
        if (k == rd.rank) break;
        ++cur[k];
    }
    auto height = [&](const Weight& w) {
        long h = 0;
        for (int i = 0; i < rd.nI(); ++i) h += rd.pair_i(i, w);
        return h;
    };
    std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
        long ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
    });
    std::set<Weight> chosen_set;
    std::vector<Weight> gens;
    std::set<Weight> reachable;  // N-span of chosen generators within the box
    reachable.insert(Weight(rd.rank, 0));
    for (const auto& w : dominants) {
        if (reachable.count(w)) continue;
        gens.push_back(w);
        // saturate reachable with the new generator
        std::vector<Weight> frontier(reachable.begin(), reachable.end());
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const auto& r : frontier) {
                Weight s = weight_add(r, w);
                bool in_box = std::all_of(s.begin(), s.end(),
                                          [&](long x) { return -box <= x && x <= box; });
                if (in_box && reachable.insert(s).second) next.push_back(s);
            }
            frontier = std::move(next);
        }
    }
    // verification window: every dominant weight within half the box must be reachable
    for (const auto& w : dominants) {
        bool small = std::all_of(w.begin(), w.end(),
                                 [&](long x) { return -box / 2 <= x && x <= box / 2; });
        if (small && !reachable.count(w))
            throw InvalidDatum("dominant-cone generator enumeration window insufficient");
    }
    return gens;
}

}  // namespace chevalg
