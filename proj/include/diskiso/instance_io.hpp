#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diskiso/geom.hpp"

namespace diskiso {

struct Instance {
    std::vector<Disk> disks;
    std::vector<Point> points;
    std::uint64_t seed = 0;
    Tolerance tol;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// JSON document with keys "disks" ([{id, cx, cy, r}]), "points" ([{x, y}]),
/// "seed", "eps" and "min_feature". Doubles are written so they read back
/// bit-exactly.
std::string write_instance(const Instance& instance);

/// Throws ParseError on malformed documents and, when `validate` is set,
/// InvalidInstance listing every failed check.
Instance parse_instance(std::string_view text, bool validate = true);

/// Ids unique, radii positive, coordinates finite, general position at
/// min_feature, and every pair of points separated.
void validate_instance(const Instance& instance);

struct GeneratorOptions {
    /// Disks closer than this to tangency, and points closer than this to a
    /// circle, are resampled. Keeps instances checkable by the grid verifier.
    double margin = 0.02;
    int layout_attempts = 64;
    int point_samples = 4000;
    int disk_tries = 200;
};

/// Unit disks uniform in [0, box]^2 and up to k pairwise separated,
/// uncovered points. Deterministic for a given seed; throws GenerationFailed
/// when fewer than two separated points can be found.
Instance generate_random_instance(std::size_t n, std::size_t k, double box, std::uint64_t seed,
                                  const GeneratorOptions& options = {});

struct ExperimentRecord {
    std::string instance;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t alg_size = 0;
    std::optional<std::size_t> opt_size;
    double ms = 0.0;

    std::optional<double> ratio() const {
        if (!opt_size) return std::nullopt;
        if (*opt_size == 0) return alg_size == 0 ? std::optional<double>(1.0) : std::nullopt;
        return static_cast<double>(alg_size) / static_cast<double>(*opt_size);
    }
};

inline constexpr std::string_view kCsvHeader = "instance,n,k,alg_size,opt_size,ratio,ms";
std::string to_csv_row(const ExperimentRecord& record);

/// Optional drawing layers on top of an instance.
struct SvgOverlay {
    std::vector<std::vector<Point>> polylines;   // cutting paths, one per recursion step
    std::vector<std::vector<Point>> piece_paths;  // representative points of H paths
};

std::string render_svg(const Instance& instance, std::span<const int> solution,
                       const SvgOverlay* overlay = nullptr);

}  // namespace diskiso
