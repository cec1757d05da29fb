// Copyright 2026 The mpilat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mpilat {

enum class Statistics { Boson, Fermion };

/// A set of `count` mutually indistinguishable particles.
struct ParticleGroup {
  int count = 1;
  Statistics stat = Statistics::Boson;

  bool operator==(const ParticleGroup &) const = default;
};

/// Particle content of an interferometer run.
///
/// Single, Bosons(n) and Fermions(n) describe identical particles and use one
/// occupation-number basis. Distinguishable(n) and Partial(groups) are tensor
/// products of identical-particle factors, ordered left to right as given.
class ParticleSpec {
 public:
  enum class Kind { Single, Bosons, Fermions, Distinguishable, Partial };

  static ParticleSpec single();
  static ParticleSpec bosons(int n);
  static ParticleSpec fermions(int n);
  static ParticleSpec distinguishable(int n);
  static ParticleSpec partial(std::vector<ParticleGroup> groups);

  /// Grammar: `1 | nB | nF | nD | partial:(cB|cF)(,(cB|cF))*`.
  /// Throws ParseError.
  static ParticleSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  int particle_count() const { return n_; }
  const std::vector<ParticleGroup> &groups() const { return groups_; }

  bool is_identical() const {
    return kind_ == Kind::Single || kind_ == Kind::Bosons ||
           kind_ == Kind::Fermions;
  }
  bool is_fermionic() const { return kind_ == Kind::Fermions; }

  /// Identical-particle tensor factors: Single -> [1B], Bosons(n) -> [nB],
  /// Distinguishable(n) -> n x [1B], Partial -> its groups.
  std::vector<ParticleGroup> factors() const;

  /// Throws CapacityError if a fermionic factor has more particles than ports.
  void check_capacity(int ports) const;

  std::string to_string() const;

  bool operator==(const ParticleSpec &) const = default;

 private:
  ParticleSpec(Kind kind, int n, std::vector<ParticleGroup> groups)
      : kind_(kind), n_(n), groups_(std::move(groups)) {}

  Kind kind_ = Kind::Single;
  int n_ = 1;
  std::vector<ParticleGroup> groups_;
};

using Occupation = std::vector<int>;

/// Canonically ordered occupation-number basis of `count` identical particles
/// on `ports` modes. Order is descending lexicographic, so |n,0,...,0> first.
class FockBasis {
 public:
  FockBasis(int count, Statistics stat, int ports);

  int ports() const { return ports_; }
  int particle_count() const { return count_; }
  Statistics statistics() const { return stat_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<Occupation> &states() const { return states_; }
  const Occupation &state(std::size_t i) const { return states_[i]; }

  /// Position of an occupation vector; throws PreconditionError if absent.
  std::size_t index_of(const Occupation &occ) const;
  bool contains(const Occupation &occ) const;

  /// Block sizes from splitting the last-mode occupation sequence into runs
  /// of integers increasing by one, e.g. {0,0,1,0,1,2} -> {1,2,3}.
  const std::vector<int> &partition() const { return partition_; }

 private:
  int count_;
  Statistics stat_;
  int ports_;
  std::vector<Occupation> states_;
  std::map<Occupation, std::size_t> index_;
  std::vector<int> partition_;
};

/// Runs of consecutive +1 steps in `seq`, returned as run lengths.
std::vector<int> increasing_runs(const std::vector<int> &seq);

/// Number of states for `count` particles on `ports` modes.
std::size_t basis_size(int count, Statistics stat, int ports);

/// Binomial coefficient C(n, k) (0 when k < 0 or k > n).
std::size_t binomial(int n, int k);

/// Basis of an identical-particle spec (Single, Bosons, Fermions).
/// Throws PreconditionError for composite specs, CapacityError when fermions
/// outnumber ports.
FockBasis fock_basis(const ParticleSpec &spec, int ports);

}  // namespace mpilat
