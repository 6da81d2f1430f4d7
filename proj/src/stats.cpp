#include "eccforge/stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

namespace eccforge {

GenerationStats summarize(std::size_t index, std::span<const double> fitness)
{
    GenerationStats s;
    s.index = index;
    if (fitness.empty())
        return s;
    const auto [lo, hi] = std::minmax_element(fitness.begin(), fitness.end());
    s.min = *lo;
    s.max = *hi;
    double sum = 0.0;
    for (double f : fitness)
        sum += f;
    s.avg = sum / static_cast<double>(fitness.size());
    double sq = 0.0;
    for (double f : fitness)
        sq += (f - s.avg) * (f - s.avg);
    s.std = std::sqrt(sq / static_cast<double>(fitness.size()));
    // Rounding in the mean can push it a hair outside [min, max].
    s.avg = std::clamp(s.avg, s.min, s.max);
    return s;
}

void write_history_csv(const std::filesystem::path& path, std::string_view index_column,
                       const std::vector<GenerationStats>& history)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << index_column << ",min,max,avg,std\n";
    for (const auto& s : history)
        out << fmt::format("{},{},{},{},{}\n", s.index, s.min, s.max, s.avg, s.std);
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

} // namespace eccforge
