#include "zipfkit/rankfreq.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "zipfkit/errors.hpp"

namespace zipfkit::rankfreq {

std::uint64_t TypeCounts::total() const {
  std::uint64_t n = 0;
  for (const auto& [surface, count] : counts) n += count;
  return n;
}

TypeCounts count_types(const std::vector<corpus::Token>& tokens) {
  TypeCounts tc;
  for (const corpus::Token& t : tokens) ++tc.counts[t.surface];
  return tc;
}

RankFrequencyTable build_rank_frequency(const TypeCounts& counts) {
  RankFrequencyTable table;
  table.entries.reserve(counts.counts.size());
  for (const auto& [surface, count] : counts.counts)
    table.entries.push_back(RankEntry{0, surface, count});
  // The counts map iterates surfaces in ascending order; a stable sort on
  // frequency keeps that order within ties.
  std::stable_sort(table.entries.begin(), table.entries.end(),
                   [](const RankEntry& a, const RankEntry& b) { return a.frequency > b.frequency; });
  std::uint64_t rank = 0;
  std::uint64_t n = 0;
  for (RankEntry& e : table.entries) {
    e.rank = ++rank;
    n += e.frequency;
  }
  table.total_tokens = n;
  return table;
}

FrequencySpectrum frequency_spectrum(const RankFrequencyTable& table) {
  if (table.entries.empty())
    throw DegenerateInputError("frequency spectrum is undefined for an empty table");
  FrequencySpectrum spectrum;
  spectrum.total_tokens = table.total_tokens;
  spectrum.total_types = table.type_count();
  for (const RankEntry& e : table.entries) ++spectrum.types_with_frequency[e.frequency];
  for (const auto& [f, v] : spectrum.types_with_frequency)
    spectrum.probability[f] =
        static_cast<double>(v) / static_cast<double>(spectrum.total_types);
  return spectrum;
}

std::string synthetic_rank_surface(std::uint64_t rank) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%05llu", static_cast<unsigned long long>(rank));
  return "⟨r" + std::string(buf) + "⟩";
}

RankFrequencyTable parse_rank_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open rank table: " + path.string());
  RankFrequencyTable table;
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t expected_from = 1;
  std::uint64_t prev_freq = std::numeric_limits<std::uint64_t>::max();
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string where = path.string() + ":" + std::to_string(lineno);
    std::istringstream row(line);
    std::uint64_t from = 0, to = 0, freq = 0;
    if (!(row >> from >> to >> freq))
      throw FormatError(where + ": expected \"rank_from<TAB>rank_to<TAB>frequency\"");
    std::string extra;
    if (row >> extra) throw FormatError(where + ": trailing content \"" + extra + "\"");
    if (from != expected_from)
      throw FormatError(where + ": rank range starts at " + std::to_string(from) +
                        ", expected " + std::to_string(expected_from) +
                        " (gap or overlap)");
    if (to < from) throw FormatError(where + ": rank_to precedes rank_from");
    if (freq == 0) throw FormatError(where + ": frequency must be positive");
    if (freq > prev_freq)
      throw FormatError(where + ": frequencies must be non-increasing in rank");
    for (std::uint64_t r = from; r <= to; ++r) {
      table.entries.push_back(RankEntry{r, synthetic_rank_surface(r), freq});
      table.total_tokens += freq;
    }
    expected_from = to + 1;
    prev_freq = freq;
  }
  if (table.entries.empty()) throw FormatError(path.string() + ": no rank rows");
  validate(table);
  return table;
}

void validate(const RankFrequencyTable& table) {
  std::uint64_t n = 0;
  std::uint64_t prev = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const RankEntry& e = table.entries[i];
    if (e.rank != i + 1) throw FormatError("ranks must be dense 1..V");
    if (e.frequency == 0) throw FormatError("frequencies must be positive");
    if (e.frequency > prev) throw FormatError("frequencies must be non-increasing in rank");
    if (e.surface.empty()) throw FormatError("surface forms must be nonempty");
    prev = e.frequency;
    n += e.frequency;
  }
  if (n != table.total_tokens) throw FormatError("frequency sum disagrees with token total");
}

}  // namespace zipfkit::rankfreq
