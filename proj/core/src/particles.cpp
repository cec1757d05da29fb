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

#include "mpilat/particles.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "mpilat/errors.hpp"

namespace mpilat {

namespace {

void require_positive(int n, const char *what) {
  if (n < 1) {
    std::ostringstream msg;
    msg << what << ": particle number must be >= 1, got " << n;
    throw PreconditionError(msg.str());
  }
}

int parse_count(std::string_view digits, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 1)
    throw ParseError("invalid particle count in spec string '" +
                     std::string(whole) + "'");
  return value;
}

// Splits "12B" into (12, 'B').
std::pair<int, char> split_token(std::string_view token, std::string_view whole) {
  if (token.size() < 2)
    throw ParseError("malformed spec token '" + std::string(token) + "' in '" +
                     std::string(whole) + "'");
  const char tag = static_cast<char>(std::toupper(token.back()));
  return {parse_count(token.substr(0, token.size() - 1), whole), tag};
}

void enumerate(int remaining, int mode, int cap, Occupation &current,
               std::vector<Occupation> &out) {
  const int ports = static_cast<int>(current.size());
  if (mode == ports - 1) {
    if (remaining <= cap) {
      current[mode] = remaining;
      out.push_back(current);
    }
    return;
  }
  for (int k = std::min(remaining, cap); k >= 0; --k) {
    current[mode] = k;
    enumerate(remaining - k, mode + 1, cap, current, out);
  }
  current[mode] = 0;
}

}  // namespace

ParticleSpec ParticleSpec::single() { return {Kind::Single, 1, {{1, Statistics::Boson}}}; }

ParticleSpec ParticleSpec::bosons(int n) {
  require_positive(n, "bosons");
  return {Kind::Bosons, n, {{n, Statistics::Boson}}};
}

ParticleSpec ParticleSpec::fermions(int n) {
  require_positive(n, "fermions");
  return {Kind::Fermions, n, {{n, Statistics::Fermion}}};
}

ParticleSpec ParticleSpec::distinguishable(int n) {
  require_positive(n, "distinguishable");
  return {Kind::Distinguishable, n,
          std::vector<ParticleGroup>(n, {1, Statistics::Boson})};
}

ParticleSpec ParticleSpec::partial(std::vector<ParticleGroup> groups) {
  if (groups.empty())
    throw PreconditionError("partial: at least one particle group required");
  int total = 0;
  for (const auto &g : groups) {
    require_positive(g.count, "partial group");
    total += g.count;
  }
  return {Kind::Partial, total, std::move(groups)};
}

ParticleSpec ParticleSpec::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty spec string");
  if (s == "1") return single();

  constexpr std::string_view kPartial = "partial:";
  if (s.substr(0, kPartial.size()) == kPartial) {
    std::string_view rest = s.substr(kPartial.size());
    std::vector<ParticleGroup> groups;
    while (true) {
      const auto comma = rest.find(',');
      auto [count, tag] = split_token(rest.substr(0, comma), text);
      if (tag == 'B')
        groups.push_back({count, Statistics::Boson});
      else if (tag == 'F')
        groups.push_back({count, Statistics::Fermion});
      else
        throw ParseError("partial groups must be cB or cF in '" +
                         std::string(text) + "'");
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return partial(std::move(groups));
  }

  auto [count, tag] = split_token(s, text);
  switch (tag) {
    case 'B': return bosons(count);
    case 'F': return fermions(count);
    case 'D': return distinguishable(count);
    default:
      throw ParseError("unknown particle kind in spec string '" +
                       std::string(text) + "'");
  }
}

std::vector<ParticleGroup> ParticleSpec::factors() const { return groups_; }

void ParticleSpec::check_capacity(int ports) const {
  for (const auto &g : groups_) {
    if (g.stat == Statistics::Fermion && g.count > ports) {
      std::ostringstream msg;
      msg << g.count << " fermions cannot occupy " << ports
          << " ports (at most one fermion per port)";
      throw CapacityError(msg.str());
    }
  }
}

std::string ParticleSpec::to_string() const {
  auto tag = [](Statistics s) { return s == Statistics::Boson ? 'B' : 'F'; };
  std::ostringstream out;
  switch (kind_) {
    case Kind::Single: out << "1"; break;
    case Kind::Bosons: out << n_ << 'B'; break;
    case Kind::Fermions: out << n_ << 'F'; break;
    case Kind::Distinguishable: out << n_ << 'D'; break;
    case Kind::Partial:
      out << "partial:";
      for (std::size_t i = 0; i < groups_.size(); ++i) {
        if (i) out << ',';
        out << groups_[i].count << tag(groups_[i].stat);
      }
      break;
  }
  return out.str();
}

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / i;
  return r;
}

std::size_t basis_size(int count, Statistics stat, int ports) {
  return stat == Statistics::Boson ? binomial(ports - 1 + count, count)
                                   : binomial(ports, count);
}

std::vector<int> increasing_runs(const std::vector<int> &seq) {
  std::vector<int> runs;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0 && seq[i] == seq[i - 1] + 1)
      ++runs.back();
    else
      runs.push_back(1);
  }
  return runs;
}

FockBasis::FockBasis(int count, Statistics stat, int ports)
    : count_(count), stat_(stat), ports_(ports) {
  if (ports < 1) throw PreconditionError("port count must be >= 1");
  if (count < 1) throw PreconditionError("particle number must be >= 1");
  if (stat == Statistics::Fermion && count > ports) {
    std::ostringstream msg;
    msg << count << " fermions cannot occupy " << ports
        << " ports (at most one fermion per port)";
    throw CapacityError(msg.str());
  }
  const int cap = stat == Statistics::Fermion ? 1 : count;
  Occupation current(ports, 0);
  enumerate(count, 0, cap, current, states_);
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);

  std::vector<int> last_mode;
  last_mode.reserve(states_.size());
  for (const auto &s : states_) last_mode.push_back(s.back());
  partition_ = increasing_runs(last_mode);

  if (ports >= 2) {
    // Every run must be exactly one group of states sharing modes 1..d-2,
    // otherwise the block-diagonal seed would couple unrelated states.
    std::size_t pos = 0;
    for (int len : partition_) {
      const auto &head = states_[pos];
      for (int i = 0; i < len; ++i) {
        const auto &s = states_[pos + i];
        if (!std::equal(head.begin(), head.end() - 2, s.begin()))
          throw ConsistencyError("canonical ordering violates the partition criterion");
      }
      const std::size_t next = pos + len;
      if (next < states_.size() &&
          std::equal(head.begin(), head.end() - 2, states_[next].begin()))
        throw ConsistencyError("canonical ordering violates the partition criterion");
      pos = next;
    }
  }
}

std::size_t FockBasis::index_of(const Occupation &occ) const {
  auto it = index_.find(occ);
  if (it == index_.end())
    throw PreconditionError("occupation vector is not part of the basis");
  return it->second;
}

bool FockBasis::contains(const Occupation &occ) const {
  return index_.count(occ) != 0;
}

FockBasis fock_basis(const ParticleSpec &spec, int ports) {
  if (!spec.is_identical())
    throw PreconditionError("fock_basis: spec '" + spec.to_string() +
                            "' is not an identical-particle spec");
  const auto &g = spec.groups().front();
  return FockBasis(g.count, g.stat, ports);
}

}  // namespace mpilat
