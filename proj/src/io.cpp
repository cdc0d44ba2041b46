#include "pidim/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "pidim/rng.hpp"

namespace pidim {

std::string fmt17(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<MetaKV> base_metadata(const std::string& subcommand, const IfsParams& params) {
    return {
        {"tool", std::string(kToolName) + " " + kToolVersion},
        {"subcommand", subcommand},
        {"alpha", std::to_string(params.alpha)},
        {"beta", std::to_string(params.beta)},
        {"p", fmt17(params.p)},
    };
}

namespace {

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void append_meta_object(std::ostringstream& out, const std::vector<MetaKV>& meta) {
    out << "  \"meta\": {";
    for (std::size_t i = 0; i < meta.size(); ++i) {
        if (i > 0) out << ", ";
        out << json_string(meta[i].key) << ": " << json_string(meta[i].value);
    }
    out << "},\n";
}

void append_params_object(std::ostringstream& out, const IfsParams& params) {
    out << "  \"params\": {\"alpha\": " << params.alpha << ", \"beta\": " << params.beta
        << ", \"p\": " << fmt17(params.p) << "},\n";
}

void append_array(std::ostringstream& out, const std::vector<double>& values) {
    out << "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ", ";
        out << fmt17(values[i]);
    }
    out << "]";
}

std::string opt17(const std::optional<double>& v) {
    return v.has_value() ? fmt17(*v) : "null";
}

}  // namespace

std::string xi_json(const std::vector<MetaKV>& meta, const IfsParams& params,
                    std::int64_t truncation_n, double residual,
                    const std::vector<double>& xi) {
    std::ostringstream out;
    out << "{\n";
    append_meta_object(out, meta);
    append_params_object(out, params);
    out << "  \"truncation\": {\"n\": " << truncation_n << ", \"residual\": "
        << fmt17(residual) << "},\n";
    out << "  \"xi\": ";
    append_array(out, xi);
    out << "\n}\n";
    return out.str();
}

std::string bounds_json(const std::vector<MetaKV>& meta, const IfsParams& params,
                        std::int64_t truncation_n, double residual,
                        const std::vector<double>& xi, const DimensionBounds& bounds) {
    std::ostringstream out;
    out << "{\n";
    append_meta_object(out, meta);
    append_params_object(out, params);
    out << "  \"truncation\": {\"n\": " << truncation_n << ", \"residual\": "
        << fmt17(residual) << "},\n";
    out << "  \"xi\": ";
    append_array(out, xi);
    out << ",\n";
    out << "  \"bounds\": {\"hausdorff_lower\": " << opt17(bounds.hausdorff_lower)
        << ", \"hausdorff_upper\": " << fmt17(bounds.hausdorff_upper)
        << ", \"naive_upper\": " << fmt17(bounds.naive_upper)
        << ", \"packing_lower\": " << opt17(bounds.packing_lower)
        << ", \"packing_upper\": " << opt17(bounds.packing_upper)
        << ", \"mean_digit\": " << fmt17(bounds.mean_digit) << "}\n";
    out << "}\n";
    return out.str();
}

std::string digit_frequency_json(const std::vector<MetaKV>& meta, const IfsParams& params,
                                 const DigitFrequencyEstimate& est) {
    std::ostringstream out;
    out << "{\n";
    append_meta_object(out, meta);
    append_params_object(out, params);
    out << "  \"digits_emitted\": " << est.digits_emitted << ",\n";
    out << "  \"counts\": [";
    for (std::size_t i = 0; i < est.counts.size(); ++i) {
        if (i > 0) out << ", ";
        out << est.counts[i];
    }
    out << "],\n";
    out << "  \"frequencies\": ";
    append_array(out, est.frequencies);
    out << ",\n";
    out << "  \"standard_errors\": ";
    append_array(out, est.standard_errors);
    out << "\n}\n";
    return out.str();
}

void write_csv_metadata(std::ostream& out, const std::vector<MetaKV>& meta) {
    for (const auto& kv : meta) {
        out << "# " << kv.key << ": " << kv.value << "\n";
    }
}

void write_spectrum_csv(std::ostream& out, const std::vector<MetaKV>& meta,
                        const SpectrumCurve& curve) {
    write_csv_metadata(out, meta);
    out << "t,fbar_lower_bound,funder_lower_bound,upper_line_t\n";
    for (std::size_t i = 0; i < curve.t_grid.size(); ++i) {
        out << fmt17(curve.t_grid[i]) << "," << fmt17(curve.upper_spectrum_lb[i]) << ","
            << fmt17(curve.lower_spectrum_lb[i]) << "," << fmt17(curve.diagonal[i]) << "\n";
    }
}

void write_mass_grid_csv(std::ostream& out, const std::vector<MetaKV>& meta,
                         const std::vector<MassGrid>& grids) {
    write_csv_metadata(out, meta);
    out << "level,n,interval_left,interval_right,mass\n";
    for (const auto& grid : grids) {
        for (std::int64_t n = 0; n < grid.coverage(); ++n) {
            out << grid.level << "," << n << "," << fmt17(grid.interval_left(n)) << ","
                << fmt17(grid.interval_right(n)) << ","
                << fmt17(grid.masses[static_cast<std::size_t>(n)]) << "\n";
        }
    }
}

void write_histogram_csv(std::ostream& out, const std::vector<MetaKV>& meta,
                         const DistributionTables& tables) {
    write_csv_metadata(out, meta);
    out << "bin_left,bin_right,count,density\n";
    for (const auto& row : tables.histogram) {
        out << fmt17(row.bin_left) << "," << fmt17(row.bin_right) << "," << row.count << ","
            << fmt17(row.density) << "\n";
    }
}

void write_cdf_csv(std::ostream& out, const std::vector<MetaKV>& meta,
                   const DistributionTables& tables) {
    write_csv_metadata(out, meta);
    out << "x,cumulative_fraction\n";
    for (const auto& [x, frac] : tables.cdf) {
        out << fmt17(x) << "," << fmt17(frac) << "\n";
    }
}

}  // namespace pidim
