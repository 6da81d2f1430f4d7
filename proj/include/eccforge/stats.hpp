#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "eccforge/genome.hpp"

namespace eccforge {

/// Population fitness summary for one generation (GA) or iteration (PSO).
struct GenerationStats {
    std::size_t index = 0;
    double min = 0.0;
    double max = 0.0;
    double avg = 0.0;
    double std = 0.0; // population standard deviation
    double best_fitness = 0.0; // best seen so far, including earlier entries
    Candidate best;            // snapshot of the best-so-far candidate
};

/// min/max/avg/std over `fitness`; `best_fitness` and `best` are left for the caller.
GenerationStats summarize(std::size_t index, std::span<const double> fitness);

/// Header `<index_column>,min,max,avg,std`, one LF-terminated row per entry.
void write_history_csv(const std::filesystem::path& path, std::string_view index_column,
                       const std::vector<GenerationStats>& history);

} // namespace eccforge
