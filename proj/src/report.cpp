#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "mgeo/io.hpp"
#include "mgeo/pipeline.hpp"

#include <json.hpp>

namespace mgeo {

using nlohmann::json;

namespace {

json jreal(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

json fit_json(const ModulusFit& fit) {
    return {{"family", fit.family == ModulusFamily::linear ? "linear" : "power_pair"},
            {"C", jreal(fit.C)},
            {"alpha", jreal(fit.alpha)}};
}

const char* csv_header() {
    return "epsilon,net_size,K_observed,R,C,L,lambda_min,lambda_max,mu,eta_C,eta_alpha,"
           "eta2_C,eta2_alpha,gh_identity,gh_common_net,gh_net_resolution,all_ok";
}

} // namespace

std::string report_table_csv(const RunReport& report) {
    std::ostringstream out;
    out << csv_header() << "\n";
    for (const EpsilonRecord& r : report.records) {
        out << format_real(r.epsilon) << "," << r.net_size << "," << r.K_observed << ","
            << format_real(r.R) << "," << format_real(r.C) << "," << format_real(r.L)
            << "," << format_real(r.lambda_min) << "," << format_real(r.lambda_max) << ","
            << format_real(r.mu) << "," << format_real(r.eta.C) << ","
            << format_real(r.eta.alpha) << "," << format_real(r.eta2.C) << ","
            << format_real(r.eta2.alpha) << "," << format_real(r.gh_identity) << ","
            << format_real(r.gh_common_net) << "," << format_real(r.gh_net_resolution)
            << "," << (r.all_ok ? "true" : "false") << "\n";
    }
    return out.str();
}

std::string report_structured_json(const RunReport& report) {
    json doc;
    doc["pipeline"] = report.pipeline;
    doc["config"] = json::parse(config_to_json(report.config));
    doc["mesh_scale"] = jreal(report.mesh_scale);
    doc["global_L"] = jreal(report.global_L);
    doc["hoelder"] = {{"C", jreal(report.hoelder.C)},
                      {"alpha", jreal(report.hoelder.alpha)},
                      {"slope", jreal(report.hoelder.slope)}};
    doc["all_ok"] = report.all_ok;

    json records = json::array();
    for (const EpsilonRecord& r : report.records) {
        json rec;
        rec["epsilon"] = jreal(r.epsilon);
        rec["net_size"] = r.net_size;
        rec["K_observed"] = r.K_observed;
        rec["R"] = jreal(r.R);
        rec["C"] = jreal(r.C);
        rec["L"] = jreal(r.L);
        rec["lambda_min"] = jreal(r.lambda_min);
        rec["lambda_max"] = jreal(r.lambda_max);
        rec["mu"] = jreal(r.mu);
        rec["eta"] = fit_json(r.eta);
        rec["eta2"] = fit_json(r.eta2);
        rec["gh"] = {{"identity", jreal(r.gh_identity)},
                     {"common_net", jreal(r.gh_common_net)},
                     {"density_ok", r.gh_density_ok},
                     {"net_resolution", jreal(r.gh_net_resolution)}};
        rec["net_members"] = r.net_members;
        json lambda = json::array();
        for (double v : r.lambda_values) lambda.push_back(jreal(v));
        rec["lambda"] = std::move(lambda);
        json smoothed = json::array();
        for (double v : r.lambda_smoothed) smoothed.push_back(jreal(v));
        rec["lambda_smoothed"] = std::move(smoothed);
        json verdicts = json::array();
        for (const VerdictRecord& v : r.verdicts)
            verdicts.push_back({{"stage", v.stage},
                                {"ok", v.ok},
                                {"bound", jreal(v.bound)},
                                {"observed", jreal(v.observed)},
                                {"margin", jreal(v.margin)},
                                {"witness", v.witness}});
        rec["verdicts"] = std::move(verdicts);
        rec["all_ok"] = r.all_ok;
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

namespace {

double real_or(const json& j, double fallback) {
    return j.is_number() ? j.get<double>() : fallback;
}

ModulusFit fit_from_json(const json& j) {
    ModulusFit fit;
    fit.family = j.at("family").get<std::string>() == "linear" ? ModulusFamily::linear
                                                               : ModulusFamily::power_pair;
    fit.C = real_or(j.at("C"), 1.0);
    fit.alpha = real_or(j.at("alpha"), 1.0);
    return fit;
}

} // namespace

RunReport report_from_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw io_error(std::string("report is not valid JSON: ") + e.what());
    }
    RunReport rep;
    rep.pipeline = doc.at("pipeline").get<std::string>();
    rep.config = parse_config(doc.at("config").dump());
    rep.mesh_scale = real_or(doc.at("mesh_scale"), 0.0);
    rep.global_L = real_or(doc.at("global_L"), 1.0);
    rep.hoelder.C = real_or(doc.at("hoelder").at("C"), 1.0);
    rep.hoelder.alpha = real_or(doc.at("hoelder").at("alpha"), 1.0);
    rep.hoelder.slope = real_or(doc.at("hoelder").at("slope"), 1.0);
    rep.all_ok = doc.at("all_ok").get<bool>();
    for (const json& jr : doc.at("records")) {
        EpsilonRecord r;
        r.epsilon = real_or(jr.at("epsilon"), 0.0);
        r.net_size = jr.at("net_size").get<std::size_t>();
        r.K_observed = jr.at("K_observed").get<int>();
        r.R = real_or(jr.at("R"), 0.0);
        r.C = real_or(jr.at("C"), 0.0);
        r.L = real_or(jr.at("L"), 1.0);
        r.lambda_min = real_or(jr.at("lambda_min"), 0.0);
        r.lambda_max = real_or(jr.at("lambda_max"), 0.0);
        r.mu = real_or(jr.at("mu"), 0.0);
        r.eta = fit_from_json(jr.at("eta"));
        r.eta2 = fit_from_json(jr.at("eta2"));
        r.gh_identity = real_or(jr.at("gh").at("identity"), 0.0);
        r.gh_common_net = real_or(jr.at("gh").at("common_net"), 0.0);
        r.gh_density_ok = jr.at("gh").at("density_ok").get<bool>();
        r.gh_net_resolution = real_or(jr.at("gh").at("net_resolution"), 0.0);
        r.net_members = jr.at("net_members").get<std::vector<PointId>>();
        for (const json& v : jr.at("lambda")) r.lambda_values.push_back(real_or(v, 0.0));
        for (const json& v : jr.at("lambda_smoothed"))
            r.lambda_smoothed.push_back(real_or(v, 0.0));
        for (const json& jv : jr.at("verdicts")) {
            VerdictRecord v;
            v.stage = jv.at("stage").get<std::string>();
            v.ok = jv.at("ok").get<bool>();
            v.bound = real_or(jv.at("bound"), 0.0);
            v.observed = real_or(jv.at("observed"), 0.0);
            v.margin = real_or(jv.at("margin"), std::numeric_limits<double>::infinity());
            v.witness = jv.at("witness").get<std::string>();
            r.verdicts.push_back(std::move(v));
        }
        r.all_ok = jr.at("all_ok").get<bool>();
        rep.records.push_back(std::move(r));
    }
    return rep;
}

namespace {

struct Series {
    std::string name;
    std::string color;
    std::vector<std::pair<double, double>> points; // (eps, value), value > 0
};

} // namespace

std::string report_plot_svg(const RunReport& report) {
    const double width = 640, height = 480;
    const double ml = 70, mr = 20, mt = 40, mb = 50;

    Series gh{"GH bound", "#1f77b4", {}};
    Series eta2{"eta2 constant", "#d62728", {}};
    for (const EpsilonRecord& r : report.records) {
        if (r.epsilon > 0.0 && r.gh_net_resolution > 0.0)
            gh.points.push_back({r.epsilon, r.gh_net_resolution});
        if (r.epsilon > 0.0 && r.eta2.C > 0.0) eta2.points.push_back({r.epsilon, r.eta2.C});
    }

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Series* s : {&gh, &eta2})
        for (const auto& [x, y] : s->points) {
            xmin = std::min(xmin, std::log10(x));
            xmax = std::max(xmax, std::log10(x));
            ymin = std::min(ymin, std::log10(y));
            ymax = std::max(ymax, std::log10(y));
        }
    if (!(xmin <= xmax)) {
        xmin = -1;
        xmax = 0;
        ymin = -1;
        ymax = 0;
    }
    if (xmax - xmin < 1e-12) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax - ymin < 1e-12) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double xpad = 0.05 * (xmax - xmin), ypad = 0.05 * (ymax - ymin);
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) {
        return ml + (std::log10(x) - xmin) / (xmax - xmin) * (width - ml - mr);
    };
    auto py = [&](double y) {
        return height - mb - (std::log10(y) - ymin) / (ymax - ymin) * (height - mt - mb);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << width - ml - mr
        << "\" height=\"" << height - mt - mb
        << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << report.pipeline
        << " pipeline: bounds vs epsilon (log-log)</text>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">log10(epsilon)</text>\n";

    // Tick marks at record epsilons.
    for (const EpsilonRecord& r : report.records) {
        if (!(r.epsilon > 0.0)) continue;
        const double x = px(r.epsilon);
        out << "<line x1=\"" << format_real(x) << "\" y1=\"" << height - mb << "\" x2=\""
            << format_real(x) << "\" y2=\"" << height - mb + 5
            << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << format_real(x) << "\" y=\"" << height - mb + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_real(r.epsilon) << "</text>\n";
    }

    int legend_row = 0;
    for (const Series* s : {&gh, &eta2}) {
        if (!s->points.empty()) {
            out << "<polyline fill=\"none\" stroke=\"" << s->color
                << "\" stroke-width=\"2\" points=\"";
            for (const auto& [x, y] : s->points)
                out << format_real(px(x)) << "," << format_real(py(y)) << " ";
            out << "\"/>\n";
            for (const auto& [x, y] : s->points)
                out << "<circle cx=\"" << format_real(px(x)) << "\" cy=\""
                    << format_real(py(y)) << "\" r=\"3\" fill=\"" << s->color << "\"/>\n";
        }
        const double ly = mt + 16 + 18 * legend_row++;
        out << "<line x1=\"" << ml + 10 << "\" y1=\"" << ly << "\" x2=\"" << ml + 34
            << "\" y2=\"" << ly << "\" stroke=\"" << s->color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << ml + 40 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << s->name << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void emit_report(const RunReport& report, const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw io_error("cannot create output directory '" + out_dir + "'");
    auto write = [&](const char* name, const std::string& content) {
        const auto path = std::filesystem::path(out_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
        out << content;
        if (!out) throw io_error("write failed on '" + path.string() + "'");
    };
    write("report.csv", report_table_csv(report));
    write("report.json", report_structured_json(report));
    write("report.svg", report_plot_svg(report));
}

} // namespace mgeo
