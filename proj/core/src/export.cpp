#include "seams/export.hpp"

#include <cstdio>
#include <fstream>

#include "seams/csv.hpp"
#include "seams/error.hpp"
#include "seams/version.hpp"

namespace seams {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out) throw DataError("cannot write: " + path.string());
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_stats_json(const std::filesystem::path& path, const std::string& image_name, int width,
                      int height, const DistanceStats& stats) {
    auto out = open_out(path);
    out << "{\"image\":\"" << json_escape(image_name) << "\",\"width\":" << width
        << ",\"height\":" << height << ",\"n_pairs\":" << stats.n_pairs
        << ",\"d_mean\":" << format_g9(stats.d_mean) << ",\"d_std\":" << format_g9(stats.d_std)
        << ",\"s\":" << (stats.s ? format_g9(*stats.s) : "null")
        << ",\"degenerate\":" << (stats.degenerate() ? "true" : "false") << ",\"params\":\""
        << kParamsVersion << "\"}\n";
}

void write_null_stats_json(const std::filesystem::path& path, const std::string& image_name,
                           int width, int height, const NullStats& stats) {
    auto out = open_out(path);
    out << "{\"image\":\"" << json_escape(image_name) << "\",\"width\":" << width
        << ",\"height\":" << height << ",\"kind\":\"" << to_string(stats.kind)
        << "\",\"samples\":" << stats.samples << ",\"seed\":" << stats.seed
        << ",\"degenerate_realizations\":" << stats.degenerate_realizations
        << ",\"averaged_realizations\":" << stats.averaged_realizations
        << ",\"n_pairs\":" << stats.n_pairs << ",\"d_mean\":" << format_g9(stats.d_mean)
        << ",\"d_std\":" << format_g9(stats.d_std)
        << ",\"s\":" << (stats.s ? format_g9(*stats.s) : "null")
        << ",\"degenerate\":" << (stats.degenerate() ? "true" : "false") << ",\"params\":\""
        << kParamsVersion << "\"}\n";
}

void write_histogram_csv(const std::filesystem::path& path,
                         std::span<const std::uint64_t> histogram) {
    auto out = open_out(path);
    out << "bin_lower_edge,count\n";
    for (std::size_t i = 0; i < histogram.size(); ++i) {
        out << i << ',' << histogram[i] << '\n';
    }
}

void write_histogram_csv(const std::filesystem::path& path, std::span<const double> histogram) {
    auto out = open_out(path);
    out << "bin_lower_edge,count\n";
    for (std::size_t i = 0; i < histogram.size(); ++i) {
        out << i << ',' << format_g9(histogram[i]) << '\n';
    }
}

namespace {

template <typename Param>
void write_sweep_impl(const std::filesystem::path& path, const std::string& image_id,
                      std::span<const std::pair<Param, DistanceStats>> sweep) {
    auto out = open_out(path);
    out << "image_id,parameter,s,d_mean,d_std\n";
    for (const auto& [param, stats] : sweep) {
        out << image_id << ',' << param << ',' << (stats.s ? format_g9(*stats.s) : "") << ','
            << format_g9(stats.d_mean) << ',' << format_g9(stats.d_std) << '\n';
    }
}

}  // namespace

void write_sweep_csv(const std::filesystem::path& path, const std::string& image_id,
                     std::span<const std::pair<double, DistanceStats>> sweep) {
    write_sweep_impl(path, image_id, sweep);
}

void write_sweep_csv(const std::filesystem::path& path, const std::string& image_id,
                     std::span<const std::pair<int, DistanceStats>> sweep) {
    write_sweep_impl(path, image_id, sweep);
}

void write_fig5c_csv(const std::filesystem::path& path, std::span<const TimeSeriesPoint> series) {
    auto out = open_out(path);
    out << "year,n,s_mean,s_sem\n";
    for (const TimeSeriesPoint& pt : series) {
        out << pt.period_start << ',' << pt.n << ',' << format_g9(pt.s_mean) << ','
            << format_g9(pt.s_sem) << '\n';
    }
}

void write_fig5d_csv(const std::filesystem::path& path, std::span<const TimeSeriesPoint> series) {
    auto out = open_out(path);
    out << "year,s_std\n";
    for (const TimeSeriesPoint& pt : series) {
        out << pt.period_start << ',' << format_g9(pt.s_std) << '\n';
    }
}

void write_fig6_csv(const std::filesystem::path& path, const GroupCompareResult& result) {
    auto out = open_out(path);
    out << "group,year,n,s_mean,s_sem\n";
    for (const auto& [group, series] : result.series) {
        for (const TimeSeriesPoint& pt : series) {
            out << csv_escape(group) << ',' << pt.period_start << ',' << pt.n << ','
                << format_g9(pt.s_mean) << ',' << format_g9(pt.s_sem) << '\n';
        }
    }
}

void write_ks_pairs_csv(const std::filesystem::path& path, const GroupCompareResult& result) {
    auto out = open_out(path);
    out << "group_a,group_b,statistic,p_value\n";
    for (const KsPairResult& pair : result.pairs) {
        if (!pair.ks) continue;
        out << csv_escape(pair.group_a) << ',' << csv_escape(pair.group_b) << ','
            << format_g9(pair.ks->statistic) << ',' << format_g9(pair.ks->p_value) << '\n';
    }
}

void write_ks_skipped_csv(const std::filesystem::path& path, const GroupCompareResult& result) {
    auto out = open_out(path);
    out << "group_a,group_b,reason\n";
    for (const KsPairResult& pair : result.pairs) {
        if (pair.ks) continue;
        out << csv_escape(pair.group_a) << ',' << csv_escape(pair.group_b) << ','
            << csv_escape(pair.note) << '\n';
    }
}

void write_metamorphosality_csv(const std::filesystem::path& path,
                                std::span<const ArtistProfile> profiles) {
    auto out = open_out(path);
    out << "artist_id,slope,mu,n_paintings,distinct_years\n";
    for (const ArtistProfile& p : profiles) {
        out << csv_escape(p.artist_id) << ',' << (p.slope ? format_g9(*p.slope) : "") << ','
            << (p.mu ? format_g9(*p.mu) : "") << ',' << p.paintings.size() << ','
            << p.distinct_years << '\n';
    }
}

void write_singularity_csv(const std::filesystem::path& path,
                           std::span<const ArtistProfile> profiles) {
    auto out = open_out(path);
    out << "artist_id,nu,frac_high,frac_low,n_defined\n";
    for (const ArtistProfile& p : profiles) {
        out << csv_escape(p.artist_id) << ',' << (p.nu ? format_g9(*p.nu) : "") << ','
            << format_g9(p.frac_high) << ',' << format_g9(p.frac_low) << ',' << p.n_defined
            << '\n';
    }
}

void write_verdicts_csv(const std::filesystem::path& path,
                        std::span<const SingularityVerdict> verdicts) {
    auto out = open_out(path);
    out << "painting_id,z,band,window_n\n";
    for (const SingularityVerdict& v : verdicts) {
        out << csv_escape(v.painting_id) << ',' << (v.z ? format_g9(*v.z) : "") << ','
            << to_string(v.band) << ',' << v.window_n << '\n';
    }
}

void write_diversity_csv(const std::filesystem::path& path, const DiversityReport& report) {
    auto out = open_out(path);
    out << "artist_id,painting_count,diversity\n";
    for (const DiversityRow& row : report.rows) {
        out << csv_escape(row.artist_id) << ',' << row.painting_count << ','
            << (row.diversity ? format_g9(*row.diversity) : "") << '\n';
    }
}

std::string error_json(const std::string& kind, const std::string& message) {
    return "{\"error\":\"" + json_escape(kind) + "\",\"message\":\"" + json_escape(message) +
           "\"}";
}

}  // namespace seams
