#pragma once

// CSV emission: sample batches, histogram tables, and density/CDF tables.
// Metadata travels in '#'-prefixed comment lines ahead of the header row.
// Doubles are printed with 17 significant digits so replays are byte-exact.

#include "rwa/rng.hpp"
#include "rwa/sampling.hpp"
#include "rwa/stats.hpp"

#include <cstdio>
#include <ostream>
#include <span>
#include <string>

namespace rwa {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_batch_csv(std::ostream& os, const SampleBatch& batch) {
    os << "# spec: " << batch.description << '\n';
    os << "# generator: " << RngStream::algorithm_name << '\n';
    os << "# seed: " << batch.seed << '\n';
    os << "# stream: " << batch.stream_id << '\n';
    os << "# n: " << batch.n() << '\n';
    os << "value\n";
    for (double v : batch.values) os << format_double(v) << '\n';
}

inline void write_histogram_csv(std::ostream& os, std::span<const HistogramBin> bins,
                                const std::string& description) {
    os << "# spec: " << description << '\n';
    os << "# bins: " << bins.size() << '\n';
    os << "bin_center,count,density\n";
    for (const auto& b : bins)
        os << format_double(b.center) << ',' << b.count << ',' << format_double(b.density) << '\n';
}

inline void write_density_table_csv(std::ostream& os, const std::string& description,
                                    std::span<const double> xs, std::span<const double> pdfs,
                                    std::span<const double> cdfs) {
    os << "# spec: " << description << '\n';
    os << "x,pdf,cdf\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << format_double(xs[i]) << ',' << format_double(pdfs[i]) << ','
           << format_double(cdfs[i]) << '\n';
}

}  // namespace rwa
