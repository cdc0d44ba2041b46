#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "pidim/dimension.hpp"
#include "pidim/multiscale.hpp"
#include "pidim/params.hpp"
#include "pidim/simulate.hpp"
#include "pidim/spectrum.hpp"

namespace pidim {

inline constexpr const char* kToolName = "pidim";
inline constexpr const char* kToolVersion = "1.0.0";

// 17 significant digits: round-trips every double. Display rounding happens
// only in human-readable summaries, never in data files.
std::string fmt17(double v);

// Run metadata embedded in every output file (no timestamps in data files;
// reruns with equal flags must be byte-identical).
struct MetaKV {
    std::string key;
    std::string value;
};

std::vector<MetaKV> base_metadata(const std::string& subcommand, const IfsParams& params);

// JSON documents are emitted with fixed key order and fixed formatting so
// equal inputs give equal bytes.
std::string xi_json(const std::vector<MetaKV>& meta, const IfsParams& params,
                    std::int64_t truncation_n, double residual,
                    const std::vector<double>& xi);

std::string bounds_json(const std::vector<MetaKV>& meta, const IfsParams& params,
                        std::int64_t truncation_n, double residual,
                        const std::vector<double>& xi, const DimensionBounds& bounds);

std::string digit_frequency_json(const std::vector<MetaKV>& meta, const IfsParams& params,
                                 const DigitFrequencyEstimate& est);

// CSV files carry their metadata as leading '# key: value' comment lines.
void write_csv_metadata(std::ostream& out, const std::vector<MetaKV>& meta);
void write_spectrum_csv(std::ostream& out, const std::vector<MetaKV>& meta,
                        const SpectrumCurve& curve);
void write_mass_grid_csv(std::ostream& out, const std::vector<MetaKV>& meta,
                         const std::vector<MassGrid>& grids);
void write_histogram_csv(std::ostream& out, const std::vector<MetaKV>& meta,
                         const DistributionTables& tables);
void write_cdf_csv(std::ostream& out, const std::vector<MetaKV>& meta,
                   const DistributionTables& tables);

}  // namespace pidim
