#include "boolsd/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "boolsd/catalog.hpp"
#include "boolsd/errors.hpp"
#include "boolsd/grid.hpp"

namespace boolsd::io {

namespace {
const double kInf = std::numeric_limits<double>::infinity();

double endpoint_from_json(const json& v) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "+inf") return kInf;
        if (s == "-inf") return -kInf;
        throw DomainError("measure json: bad interval endpoint '" + s + "'");
    }
    return v.get<double>();
}
}  // namespace

SpectralMeasure measure_from_json(const json& j) {
    std::vector<Atom> atoms;
    if (j.contains("atoms"))
        for (const auto& a : j.at("atoms"))
            atoms.push_back({a.at("x").get<double>(), a.at("w").get<double>()});

    std::vector<Interval> support;
    if (j.contains("support"))
        for (const auto& iv : j.at("support"))
            support.push_back({endpoint_from_json(iv.at(0)), endpoint_from_json(iv.at(1))});

    Density dens;
    if (j.contains("density") && !j.at("density").is_null()) {
        const json& d = j.at("density");
        const std::string kind = d.at("kind").get<std::string>();
        if (kind == "table") {
            auto xs = d.at("x").get<std::vector<double>>();
            auto vs = d.at("v").get<std::vector<double>>();
            if (xs.size() != vs.size() || xs.size() < 2)
                throw DomainError("measure json: table density needs matching x/v arrays");
            dens = [xs = std::move(xs), vs = std::move(vs)](double x) {
                if (x <= xs.front()) return vs.front();
                if (x >= xs.back()) return vs.back();
                const auto it = std::lower_bound(xs.begin(), xs.end(), x);
                const std::size_t k = static_cast<std::size_t>(it - xs.begin());
                const double t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
                return (1.0 - t) * vs[k - 1] + t * vs[k];
            };
            if (support.empty()) support.push_back({d.at("x").front(), d.at("x").back()});
        } else {
            std::map<std::string, double> params;
            for (const auto& [key, val] : d.items())
                if (key != "kind" && val.is_number()) params[key] = val.get<double>();
            const auto entry = catalog::make(kind, params);
            if (!entry.measure || !entry.measure->has_density())
                throw DomainError("measure json: catalog id '" + kind + "' has no density");
            dens = entry.measure->density();
            if (support.empty()) support = entry.measure->support();
        }
    }

    std::optional<double> mass;
    if (j.contains("mass") && !j.at("mass").is_null()) mass = j.at("mass").get<double>();
    return SpectralMeasure(std::move(atoms), std::move(dens), std::move(support), mass);
}

SpectralMeasure load_measure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open measure file: " + path);
    json j;
    in >> j;
    return measure_from_json(j);
}

json measure_to_json(const SpectralMeasure& mu, int density_samples) {
    json j;
    j["atoms"] = json::array();
    for (const auto& a : mu.atoms()) j["atoms"].push_back({{"x", a.x}, {"w", a.w}});
    j["support"] = json::array();
    for (const auto& [lo, hi] : mu.support()) {
        json iv = json::array();
        iv.push_back(std::isinf(lo) ? json("-inf") : json(lo));
        iv.push_back(std::isinf(hi) ? json("inf") : json(hi));
        j["support"].push_back(iv);
    }
    if (mu.has_density()) {
        // densities are callables; serialize a sampled table view
        double lo = mu.support().front().first, hi = mu.support().back().second;
        if (std::isinf(lo)) lo = -20.0;
        if (std::isinf(hi)) hi = 20.0;
        auto xs = linspace(lo, hi, density_samples);
        std::vector<double> vs(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) vs[i] = mu.density_at(xs[i]);
        j["density"] = {{"kind", "table"}, {"x", xs}, {"v", vs}};
    }
    if (mu.mass_hint()) j["mass"] = *mu.mass_hint();
    return j;
}

// ---------------------------------------------------------------------------

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw DomainError("cannot open for writing: " + path);
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << columns[i] << (i + 1 < columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
        out << "\n";
    }
}

void write_boundary_profile_csv(const std::string& path, const BoundaryProfile& bp) {
    std::vector<std::vector<double>> rows;
    rows.reserve(bp.grid.size());
    for (std::size_t i = 0; i < bp.grid.size(); ++i)
        rows.push_back({bp.grid[i], bp.values[i], bp.residuals[i],
                        static_cast<double>(bp.flags[i])});
    write_csv(path, {"x", "value", "residual", "flag"}, rows);
}

void write_kprofile_csv(const std::string& path, const KProfile& p) {
    std::vector<std::vector<double>> rows;
    rows.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        rows.push_back({p.grid[i], p.k[i], p.ell[i], static_cast<double>(p.flags[i])});
    write_csv(path, {"x", "k", "ell", "flag"}, rows);
}

// ---------------------------------------------------------------------------

json sd_report_to_json(const sd::SdReport& rep) {
    json j;
    j["verdict"] = sd::to_string(rep.verdict);
    j["reason"] = rep.reason;
    j["gaussian_component"] = rep.gaussian_component;
    j["levy_atoms"] = rep.levy_atom_locations;
    j["unimodality"] = {
        {"verdict", sd::to_string(rep.unimodality.verdict)},
        {"tolerance", rep.unimodality.tolerance},
        {"worst", {{"x1", rep.unimodality.worst.x1},
                   {"x2", rep.unimodality.worst.x2},
                   {"k1", rep.unimodality.worst.k1},
                   {"k2", rep.unimodality.worst.k2},
                   {"gap", rep.unimodality.worst.gap}}}};
    j["ac_certificate"] = {{"all_pass", rep.ac.all_pass},
                           {"gaussian_component", rep.ac.gaussian_component},
                           {"note", rep.ac.note},
                           {"points", json::array()}};
    for (const auto& p : rep.ac.points)
        j["ac_certificate"]["points"].push_back(
            {{"x", p.x}, {"condition", p.condition}, {"estimate", p.estimate}, {"pass", p.pass}});
    j["profile"] = {{"alpha", std::isinf(rep.profile.alpha)
                                  ? json(rep.profile.alpha < 0 ? "-inf" : "inf")
                                  : json(rep.profile.alpha)},
                    {"beta", std::isinf(rep.profile.beta)
                                 ? json(rep.profile.beta < 0 ? "-inf" : "inf")
                                 : json(rep.profile.beta)},
                    {"points", rep.profile.size()}};
    return j;
}

json census_to_json(const sd::AtomCensus& census) {
    json j;
    j["mass_at_zero"] = census.mass_at_zero;
    j["atoms"] = json::array();
    for (const auto& a : census.atoms) j["atoms"].push_back({{"x", a.x}, {"w", a.w}});
    j["count"] = census.atoms.size();
    return j;
}

json shift_threshold_to_json(const sd::ShiftThresholdReport& rep) {
    auto fin = [](double v) {
        return std::isinf(v) ? json(v < 0 ? "-inf" : "inf") : json(v);
    };
    json j;
    j["flat"] = rep.flat;
    j["m_plus"] = fin(rep.m_plus);
    j["m_minus"] = fin(rep.m_minus);
    j["witness_plus"] = {{"a", rep.witness_plus.a},
                         {"b", rep.witness_plus.b},
                         {"ell_a", rep.witness_plus.ell_a},
                         {"ell_b", rep.witness_plus.ell_b}};
    j["witness_minus"] = {{"c", rep.witness_minus.a},
                          {"d", rep.witness_minus.b},
                          {"ell_c", rep.witness_minus.ell_a},
                          {"ell_d", rep.witness_minus.ell_b}};
    return j;
}

json normal_threshold_to_json(const sd::NormalThresholdReport& rep) {
    json j;
    j["a0"] = rep.a0;
    j["M0"] = rep.m0;
    j["ell_second_zeros"] = rep.ell_second_zeros;
    json curve = json::array();
    for (const auto& [a, p] : rep.p_curve) curve.push_back({{"a", a}, {"p", p}});
    j["p_curve"] = curve;
    return j;
}

// ---------------------------------------------------------------------------

void write_svg_chart(const std::string& path, const std::string& title,
                     const std::vector<Series>& series, int width, int height) {
    double xmin = kInf, xmax = -kInf, ymin = kInf, ymax = -kInf;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!(xmin < xmax)) { xmin = 0.0; xmax = 1.0; }
    if (!(ymin < ymax)) { ymin = 0.0; ymax = 1.0; }
    const double pad_y = 0.05 * (ymax - ymin);
    ymin -= pad_y;
    ymax += pad_y;

    const int ml = 56, mr = 16, mt = 34, mb = 40;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto sx = [&](double x) { return ml + pw * (x - xmin) / (xmax - xmin); };
    auto sy = [&](double y) { return mt + ph * (1.0 - (y - ymin) / (ymax - ymin)); };

    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open for writing: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
        << mt + ph << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
        << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        const double yv = ymin + (ymax - ymin) * i / 4.0;
        char lab[32];
        std::snprintf(lab, sizeof(lab), "%.4g", xv);
        out << "<text x=\"" << sx(xv) << "\" y=\"" << mt + ph + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << lab
            << "</text>\n";
        std::snprintf(lab, sizeof(lab), "%.4g", yv);
        out << "<text x=\"" << ml - 6 << "\" y=\"" << sy(yv) + 3
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << lab
            << "</text>\n";
    }
    int ci = 0;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << kColors[ci % 4]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            char pt[48];
            std::snprintf(pt, sizeof(pt), "%.2f,%.2f ", sx(s.x[i]), sy(s.y[i]));
            out << pt;
        }
        out << "\"/>\n";
        if (!s.label.empty())
            out << "<text x=\"" << ml + 8 << "\" y=\"" << mt + 14 + 14 * ci
                << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << kColors[ci % 4]
                << "\">" << s.label << "</text>\n";
        ++ci;
    }
    out << "</svg>\n";
}

}  // namespace boolsd::io
