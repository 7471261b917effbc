#include "diskiso/instance_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "diskiso/arrangement.hpp"
#include "diskiso/error.hpp"
#include "diskiso/recsep.hpp"

namespace diskiso {

using nlohmann::json;

std::string write_instance(const Instance& instance) {
    json doc;
    doc["disks"] = json::array();
    for (const Disk& d : instance.disks) {
        doc["disks"].push_back({{"id", d.id}, {"cx", d.center.x}, {"cy", d.center.y}, {"r", d.radius}});
    }
    doc["points"] = json::array();
    for (Point p : instance.points) doc["points"].push_back({{"x", p.x}, {"y", p.y}});
    doc["seed"] = instance.seed;
    doc["eps"] = instance.tol.eps;
    doc["min_feature"] = instance.tol.min_feature;
    return doc.dump(2) + "\n";
}

namespace {

double number_at(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number()) {
        throw Error(ErrorKind::ParseError, where + ": missing numeric field \"" + key + "\"");
    }
    return obj.at(key).get<double>();
}

}  // namespace

Instance parse_instance(std::string_view text, bool validate) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("disks") || !doc.at("disks").is_array() ||
        !doc.contains("points") || !doc.at("points").is_array()) {
        throw Error(ErrorKind::ParseError, "document needs \"disks\" and \"points\" arrays");
    }

    Instance inst;
    const auto& disks = doc.at("disks");
    for (std::size_t i = 0; i < disks.size(); ++i) {
        const std::string where = "disks[" + std::to_string(i) + "]";
        const auto& d = disks[i];
        if (!d.is_object() || !d.contains("id") || !d.at("id").is_number_integer()) {
            throw Error(ErrorKind::ParseError, where + ": missing integer field \"id\"");
        }
        inst.disks.push_back(Disk{d.at("id").get<int>(),
                                  {number_at(d, "cx", where), number_at(d, "cy", where)},
                                  number_at(d, "r", where)});
    }
    const auto& points = doc.at("points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::string where = "points[" + std::to_string(i) + "]";
        inst.points.push_back({number_at(points[i], "x", where), number_at(points[i], "y", where)});
    }
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned()) throw Error(ErrorKind::ParseError, "\"seed\" must be unsigned");
        inst.seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("eps")) inst.tol.eps = number_at(doc, "eps", "document");
    if (doc.contains("min_feature")) inst.tol.min_feature = number_at(doc, "min_feature", "document");

    if (validate) validate_instance(inst);
    return inst;
}

void validate_instance(const Instance& inst) {
    std::vector<std::string> problems;
    if (!inst.tol.valid()) problems.push_back("tolerances must satisfy 0 < eps < min_feature");
    std::set<int> ids;
    for (const Disk& d : inst.disks) {
        if (!ids.insert(d.id).second) problems.push_back("duplicate disk id " + std::to_string(d.id));
        if (!(d.radius > 0) || !std::isfinite(d.radius))
            problems.push_back("disk " + std::to_string(d.id) + " has a non-positive radius");
        if (!std::isfinite(d.center.x) || !std::isfinite(d.center.y))
            problems.push_back("disk " + std::to_string(d.id) + " has a non-finite center");
    }
    for (std::size_t p = 0; p < inst.points.size(); ++p) {
        if (!std::isfinite(inst.points[p].x) || !std::isfinite(inst.points[p].y))
            problems.push_back("point " + std::to_string(p) + " is not finite");
    }
    if (problems.empty()) {
        const auto report = check_general_position(inst.disks, inst.points, inst.tol);
        problems.insert(problems.end(), report.messages.begin(), report.messages.end());
    }
    if (problems.empty() && !separates_all(inst.disks, inst.points, inst.tol)) {
        problems.push_back("the disks do not separate every pair of points");
    }
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
        throw Error(ErrorKind::InvalidInstance, msg);
    }
}

Instance generate_random_instance(std::size_t n, std::size_t k, double box, std::uint64_t seed,
                                  const GeneratorOptions& options) {
    if (n < 3 || k < 2 || !(box > 0)) {
        throw Error(ErrorKind::InvalidInstance, "generator needs n >= 3, k >= 2 and a positive box");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, box);

    // Layouts are tried until one yields k separated points; otherwise the
    // layout with the most points wins (earliest on ties).
    std::vector<Disk> best_disks;
    std::vector<Point> best_points;
    for (int attempt = 0; attempt < options.layout_attempts && best_points.size() < k; ++attempt) {
        std::vector<Disk> disks;
        bool placed_all = true;
        for (std::size_t i = 0; i < n && placed_all; ++i) {
            placed_all = false;
            for (int tries = 0; tries < options.disk_tries; ++tries) {
                const Disk cand{static_cast<int>(i), {coord(rng), coord(rng)}, 1.0};
                const bool clear = std::all_of(disks.begin(), disks.end(), [&](const Disk& d) {
                    const double dist = distance(d.center, cand.center);
                    return std::abs(dist - 2.0) >= options.margin && dist >= options.margin;
                });
                if (clear) {
                    disks.push_back(cand);
                    placed_all = true;
                    break;
                }
            }
        }
        if (!placed_all) continue;

        const UnionBoundary ub(disks);
        std::vector<Point> points;
        std::set<FaceSignature> faces;
        for (int sample = 0; sample < options.point_samples && points.size() < k; ++sample) {
            const Point p{coord(rng), coord(rng)};
            const bool clear = std::all_of(disks.begin(), disks.end(), [&](const Disk& d) {
                return distance(p, d.center) - d.radius >= options.margin;
            });
            if (!clear) continue;
            if (faces.insert(ub.signature(p)).second) points.push_back(p);
        }
        if (points.size() > best_points.size()) {
            best_disks = std::move(disks);
            best_points = std::move(points);
        }
    }
    if (best_points.size() < 2) {
        throw Error(ErrorKind::GenerationFailed,
                    "no layout with two separated points within the retry budget");
    }

    Instance inst;
    inst.seed = seed;
    std::tie(inst.disks, inst.points) = perturb_to_general_position(best_disks, best_points, inst.tol, seed);
    validate_instance(inst);
    return inst;
}

std::string to_csv_row(const ExperimentRecord& r) {
    std::ostringstream row;
    row << r.instance << ',' << r.n << ',' << r.k << ',' << r.alg_size << ',';
    if (r.opt_size) row << *r.opt_size;
    row << ',';
    if (auto ratio = r.ratio()) row << std::setprecision(6) << *ratio;
    row << ',' << std::fixed << std::setprecision(3) << r.ms;
    return row.str();
}

std::string render_svg(const Instance& inst, std::span<const int> solution, const SvgOverlay* overlay) {
    double xmin = 0, ymin = 0, xmax = 1, ymax = 1;
    bool first = true;
    auto grow = [&](Point p, double pad) {
        if (first) {
            xmin = p.x - pad, xmax = p.x + pad, ymin = p.y - pad, ymax = p.y + pad;
            first = false;
            return;
        }
        xmin = std::min(xmin, p.x - pad);
        xmax = std::max(xmax, p.x + pad);
        ymin = std::min(ymin, p.y - pad);
        ymax = std::max(ymax, p.y + pad);
    };
    for (const Disk& d : inst.disks) grow(d.center, d.radius);
    for (Point p : inst.points) grow(p, 0.0);
    const double margin = 0.5;
    xmin -= margin, ymin -= margin, xmax += margin, ymax += margin;
    const double scale = 60.0;

    // SVG y grows downwards; flip so the picture matches plane coordinates.
    auto sx = [&](double x) { return (x - xmin) * scale; };
    auto sy = [&](double y) { return (ymax - y) * scale; };

    std::ostringstream out;
    out << std::setprecision(6);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << (xmax - xmin) * scale
        << "\" height=\"" << (ymax - ymin) * scale << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const std::set<int> chosen(solution.begin(), solution.end());
    for (const Disk& d : inst.disks) {
        const bool emph = chosen.count(d.id) > 0;
        out << "<circle class=\"" << (emph ? "chosen" : "disk") << "\" cx=\"" << sx(d.center.x)
            << "\" cy=\"" << sy(d.center.y) << "\" r=\"" << d.radius * scale << "\" fill=\""
            << (emph ? "#d62728" : "#1f77b4") << "\" fill-opacity=\"" << (emph ? 0.35 : 0.15)
            << "\" stroke=\"" << (emph ? "#8b0000" : "#1f77b4") << "\" stroke-width=\""
            << (emph ? 2.5 : 1) << "\"/>\n";
    }
    if (overlay) {
        auto polyline = [&](const std::vector<Point>& pts, const char* cls, const char* style) {
            out << "<polyline class=\"" << cls << "\" fill=\"none\" " << style << " points=\"";
            for (std::size_t i = 0; i < pts.size(); ++i)
                out << (i ? " " : "") << sx(pts[i].x) << ',' << sy(pts[i].y);
            out << "\"/>\n";
        };
        for (const auto& pl : overlay->polylines)
            polyline(pl, "pi", "stroke=\"#2ca02c\" stroke-width=\"2\"");
        for (const auto& pl : overlay->piece_paths)
            polyline(pl, "piece-path", "stroke=\"#9467bd\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"");
    }
    for (Point p : inst.points) {
        out << "<circle class=\"point\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
            << "\" r=\"3\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace diskiso
