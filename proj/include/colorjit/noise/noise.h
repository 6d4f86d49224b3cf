// Copyright 2026 The colorjit Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "colorjit/decoders/graph.h"

namespace colorjit {

struct NoiseSample {
    BitVec omega;
    uint64_t seed = 0;
    double p = 0;
};

/// Independent Bernoulli(p) inclusion of each of `universe` elements.
NoiseSample sample_iid(double p, size_t universe, uint64_t seed);
BitVec sample_iid(double p, size_t universe, std::mt19937_64 &rng);

/// All vertices within distance `radius` of `center`, and the edges they induce.
struct Ball {
    uint32_t center = 0;
    int radius = 1;
    bool operator==(const Ball &o) const { return center == o.center && radius == o.radius; }
};

int total_radius(const std::vector<Ball> &balls);
BitVec ball_edges(const SyndromeGraph &g, const Ball &b);
BitVec ball_union(const SyndromeGraph &g, const std::vector<Ball> &balls);
/// Unit-length graph distances from `src` over every edge of g.
std::vector<int> graph_distances(const SyndromeGraph &g, uint32_t src);

struct Spherification {
    /// Indices into K of the selected, pairwise disjoint sets.
    std::vector<size_t> chosen;
    /// One ball per chosen set, radius twice its size, centred on one of its vertices.
    std::vector<Ball> balls;
};

/// Greedy covering: repeatedly take a largest remaining set, give it a ball, and drop
/// every set meeting it. Throws std::invalid_argument for a disconnected input set.
Spherification spherify(const SyndromeGraph &g, const std::vector<BitVec> &K);

struct AggregateBall {
    Ball ball;
    /// Connected component of the union of the input balls.
    BitVec component;
    /// Input balls whose edges lie in this component.
    std::vector<size_t> members;
};

/// One ball per connected component of the union of `balls`, centred at an endpoint of
/// a diameter of the component with radius equal to the diameter. Throws
/// std::logic_error if a diameter exceeds twice the members' total radius.
std::vector<AggregateBall> aggregate(const SyndromeGraph &g, const std::vector<Ball> &balls);

double spherification_p0(double alpha, double c);
double aggregation_p0(double alpha);

struct TailRow {
    int radius = 0;
    uint64_t count = 0;
    /// Frequency of (v, radius) in W averaged over centres v, and the largest per-centre frequency.
    double mean_frequency = 0;
    double max_frequency = 0;
    double bound = 0;
    bool violated = false;
};

struct TailReport {
    double p = 0;
    double c = 0;
    double alpha = 0;
    double p0 = 0;
    size_t trials = 0;
    std::vector<TailRow> rows;
    size_t violations() const;
};

/// Compares single-ball inclusion frequencies over `runs` (one ball set W per trial)
/// with the bound (p/p0)^(r/2c), p0 = (2 alpha)^-c. A row is flagged when the largest
/// per-centre frequency exceeds the bound by more than four standard errors.
TailReport tail_estimate(const std::vector<std::vector<Ball>> &runs, size_t num_vertices, double p, double c,
                         double alpha, int max_radius);
void write_tail_csv(std::ostream &out, const TailReport &rep);

struct AlphaReport {
    /// counts[n] = number of connected n-edge sets having v as a vertex; counts[0] = 1.
    std::vector<uint64_t> counts;
    double alpha = 0;
    bool partial = false;
};

/// Exact enumeration up to n_max (at most 6) edges; stops and flags the report as
/// partial once `budget` sets have been visited.
AlphaReport enumerate_alpha(const SyndromeGraph &g, uint32_t v, int n_max, uint64_t budget = 50'000'000);

}  // namespace colorjit
