// Copyright 2026 The qformc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qf/flows.hpp"

#include <algorithm>
#include <sstream>

namespace qf {
namespace {

std::vector<BitVector> adjacency_rows(const Geometry& geom) {
    std::size_t n = geom.size();
    std::vector<BitVector> rows(n, BitVector(n));
    for (const auto& [key, w] : geom.edges) {
        rows[key.first].set(key.second, true);
        rows[key.second].set(key.first, true);
    }
    return rows;
}

}  // namespace

std::vector<int> odd_neighborhood(const Geometry& geom, const std::vector<int>& s) {
    const std::size_t n = geom.size();
    BitVector acc(n);
    auto adj = adjacency_rows(geom);
    for (int v : s) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw Error("odd_neighborhood: unknown vertex");
        acc ^= adj[v];
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < n; ++i)
        if (acc.get(i)) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<std::string> check_gflow(const Geometry& geom, const GFlow& cand) {
    std::vector<std::string> violations;
    const std::size_t n = geom.size();
    auto note = [&](const std::string& s) { violations.push_back(s); };

    if (cand.layers.size() != n) {
        note("layer function must cover every vertex");
        return violations;
    }
    auto is_output = geom.output_mask();
    auto is_input = geom.input_mask();
    auto name = [&](int v) { return geom.vertices[static_cast<std::size_t>(v)]; };

    for (const auto& [u, s] : cand.g) {
        if (u < 0 || static_cast<std::size_t>(u) >= n || is_output[u])
            note("g defined on a vertex outside the measured set: " +
                 (u >= 0 && static_cast<std::size_t>(u) < n ? name(u) : std::to_string(u)));
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!is_output[v] && !cand.g.count(static_cast<int>(v)))
            note("g missing for measured vertex " + name(static_cast<int>(v)));
    }

    for (const auto& [u, s] : cand.g) {
        if (u < 0 || static_cast<std::size_t>(u) >= n || is_output[u]) continue;
        std::vector<int> sv(s.begin(), s.end());
        bool domain_ok = true;
        for (int v : sv) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || is_input[v]) {
                note("g(" + name(u) + ") contains a non-correctable vertex");
                domain_ok = false;
            }
        }
        if (!domain_ok) continue;
        for (int v : sv)
            if (cand.layers[u] <= cand.layers[v])
                note("g(" + name(u) + ") contains " + name(v) + " not measured after it");
        std::vector<int> odd = odd_neighborhood(geom, sv);
        bool self = false;
        for (int v : odd) {
            if (v == u) {
                self = true;
                continue;
            }
            if (cand.layers[u] <= cand.layers[v])
                note(name(v) + " in Odd(g(" + name(u) + ")) is not measured after " + name(u));
        }
        if (!self) note(name(u) + " not in Odd(g(" + name(u) + "))");
    }
    return violations;
}

std::optional<GFlow> find_gflow(const Geometry& geom) {
    if (!geom.unit_weights())
        throw FractionalEdgeError("find_gflow: geometry has fractional edges");
    const std::size_t n = geom.size();
    auto adj = adjacency_rows(geom);
    auto is_output = geom.output_mask();
    auto is_input = geom.input_mask();

    GFlow gf;
    gf.layers.assign(n, 0);
    std::vector<bool> processed(n, false);
    std::size_t done = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (is_output[v]) {
            processed[v] = true;
            ++done;
        }

    for (int layer = 1; done < n; ++layer) {
        // Snapshot of the sets at the start of the stage; every vertex
        // admitted this stage solves its system against the same snapshot.
        std::vector<int> correctors;  // processed, non-input
        for (std::size_t v = 0; v < n; ++v)
            if (processed[v] && !is_input[v]) correctors.push_back(static_cast<int>(v));
        std::vector<int> open;  // unprocessed
        for (std::size_t v = 0; v < n; ++v)
            if (!processed[v]) open.push_back(static_cast<int>(v));

        // Rows: Odd(S) restricted to the open set; solve Odd(S) cap open = {u}.
        BitMatrix a(open.size(), correctors.size());
        for (std::size_t r = 0; r < open.size(); ++r)
            for (std::size_t c = 0; c < correctors.size(); ++c)
                if (adj[open[r]].get(static_cast<std::size_t>(correctors[c])))
                    a.set(r, c, true);

        std::vector<std::pair<int, std::set<int>>> found;
        for (std::size_t k = 0; k < open.size(); ++k) {
            BitVector rhs(open.size());
            rhs.set(k, true);
            auto x = solve_affine(a, rhs);
            if (!x) continue;
            std::set<int> s;
            for (std::size_t c = 0; c < correctors.size(); ++c)
                if (x->get(c)) s.insert(correctors[c]);
            found.emplace_back(open[k], std::move(s));
        }
        if (found.empty()) return std::nullopt;
        for (auto& [u, s] : found) {
            gf.g[u] = std::move(s);
            gf.layers[static_cast<std::size_t>(u)] = layer;
            processed[static_cast<std::size_t>(u)] = true;
            ++done;
        }
    }
    return gf;
}

std::optional<Flow> find_flow(const Geometry& geom) {
    const std::size_t n = geom.size();
    auto adj = adjacency_rows(geom);
    auto is_output = geom.output_mask();
    auto is_input = geom.input_mask();

    Flow fl;
    fl.layers.assign(n, 0);
    std::vector<bool> done(n, false);
    std::size_t remaining = n;
    std::vector<bool> usable(n, false);  // may still serve as a correction target
    for (std::size_t v = 0; v < n; ++v)
        if (is_output[v]) {
            done[v] = true;
            --remaining;
            usable[v] = !is_input[v];
        }

    for (int layer = 1; remaining > 0; ++layer) {
        // Candidates against the stage-start snapshot: a usable vertex whose
        // only not-yet-measured neighbor is unique becomes that neighbor's
        // correction target.
        std::vector<std::pair<int, int>> picks;  // (u, target v)
        std::vector<bool> taken(n, false);
        for (std::size_t v = 0; v < n; ++v) {
            if (!usable[v]) continue;
            int unique = -1;
            int count = 0;
            for (std::size_t w = 0; w < n; ++w) {
                if (adj[v].get(w) && !done[w]) {
                    unique = static_cast<int>(w);
                    if (++count > 1) break;
                }
            }
            if (count == 1 && !taken[static_cast<std::size_t>(unique)]) {
                picks.emplace_back(unique, static_cast<int>(v));
                taken[static_cast<std::size_t>(unique)] = true;
            }
        }
        if (picks.empty()) return std::nullopt;
        for (auto [u, v] : picks) {
            fl.f[u] = v;
            fl.layers[static_cast<std::size_t>(u)] = layer;
            done[static_cast<std::size_t>(u)] = true;
            --remaining;
            usable[static_cast<std::size_t>(v)] = false;
            if (!is_input[static_cast<std::size_t>(u)]) usable[static_cast<std::size_t>(u)] = true;
        }
    }
    return fl;
}

std::optional<Flow> find_fractional_edge_flow(const Geometry& geom) {
    auto fl = find_flow(geom);
    if (!fl) return std::nullopt;
    for (const auto& [key, w] : geom.edges) {
        if (is_unit_weight(w)) continue;
        auto itu = fl->f.find(key.first);
        if (itu != fl->f.end() && itu->second == key.second) return std::nullopt;
        auto itv = fl->f.find(key.second);
        if (itv != fl->f.end() && itv->second == key.first) return std::nullopt;
    }
    return fl;
}

}  // namespace qf
