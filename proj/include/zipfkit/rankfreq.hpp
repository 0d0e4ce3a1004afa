#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "zipfkit/corpus.hpp"

namespace zipfkit::rankfreq {

/// Multiset of surface forms. Every stored count is >= 1.
struct TypeCounts {
  std::map<std::string, std::uint64_t> counts;

  std::uint64_t total() const;  // N, the token count
};

struct RankEntry {
  std::uint64_t rank = 0;  // dense, 1-based
  std::string surface;
  std::uint64_t frequency = 0;
};

/// Types sorted by descending frequency, ties by ascending surface form.
/// Ranks run 1..V with no gaps; frequencies are non-increasing; the
/// frequencies sum to total_tokens.
struct RankFrequencyTable {
  std::vector<RankEntry> entries;
  std::uint64_t total_tokens = 0;  // N

  std::uint64_t type_count() const { return entries.size(); }  // V
};

/// V(f) = number of types occurring exactly f times, and P(f) = V(f)/V
/// (the inverse Zipf plot ordinates).
struct FrequencySpectrum {
  std::map<std::uint64_t, std::uint64_t> types_with_frequency;  // f -> V(f)
  std::map<std::uint64_t, double> probability;                  // f -> P(f)
  std::uint64_t total_tokens = 0;                               // N
  std::uint64_t total_types = 0;                                // V
};

TypeCounts count_types(const std::vector<corpus::Token>& tokens);

RankFrequencyTable build_rank_frequency(const TypeCounts& counts);

/// Throws DegenerateInputError on an empty table (the spectrum is undefined
/// when V = 0).
FrequencySpectrum frequency_spectrum(const RankFrequencyTable& table);

/// Reads a run-length rank table: one row per line,
/// "rank_from<TAB>rank_to<TAB>frequency", ranks ascending and contiguous
/// from 1, frequencies non-increasing. Each expanded rank receives a
/// synthetic surface form.
RankFrequencyTable parse_rank_table(const std::filesystem::path& path);

/// "⟨r00042⟩"-style placeholder for tables that carry no real word forms.
std::string synthetic_rank_surface(std::uint64_t rank);

/// Checks the RankFrequencyTable invariants; throws FormatError on breach.
void validate(const RankFrequencyTable& table);

}  // namespace zipfkit::rankfreq
