#include "lipreg/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lipreg {

namespace {

using nlohmann::json;

// shortest representation that round-trips
std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

json cpwl_to_obj(const CpwlFunction& f) {
    return json{{"c0", f.c0()}, {"c1", f.c1()}, {"knots", f.knots()}, {"coeffs", f.coeffs()}};
}

json metrics_to_obj(const FitMetrics& m) {
    json obj{{"loss", m.loss},
             {"lipschitz", m.lipschitz},
             {"tv2", m.tv2},
             {"num_regions", m.num_regions},
             {"objective", m.objective},
             {"lambda", m.lambda}};
    if (m.lbar) obj["lbar"] = *m.lbar;
    return obj;
}

json report_to_obj(const AdmmReport& rep) {
    return json{{"z", rep.z},
                {"iterations", rep.iterations},
                {"primal_residual", rep.primal_residual},
                {"dual_residual", rep.dual_residual},
                {"objective", rep.objective},
                {"converged", rep.converged}};
}

json fit_to_obj(const FitResult& r) {
    return json{{"model", cpwl_to_obj(r.model)},
                {"z", r.z},
                {"metrics", metrics_to_obj(r.metrics)},
                {"solver", report_to_obj(r.solver)}};
}

} // namespace

std::string to_json(const CpwlFunction& f) { return cpwl_to_obj(f).dump(2); }

std::string to_json(const ReluNetParams& p) {
    return json{{"K", p.width()}, {"v", p.v}, {"w", p.w}, {"b", p.b}, {"c0", p.c0}, {"c1", p.c1}}
        .dump(2);
}

std::string to_json(const AdmmReport& rep) { return report_to_obj(rep).dump(2); }

std::string to_json(const FitResult& result) { return fit_to_obj(result).dump(2); }

std::string to_json(const std::vector<FitResult>& results) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(fit_to_obj(r));
    return arr.dump(2);
}

CpwlFunction cpwl_from_json(const std::string& text) {
    const json obj = json::parse(text);
    return CpwlFunction(obj.at("c0").get<double>(), obj.at("c1").get<double>(),
                        obj.at("knots").get<std::vector<double>>(),
                        obj.at("coeffs").get<std::vector<double>>());
}

ReluNetParams relu_from_json(const std::string& text) {
    const json obj = json::parse(text);
    ReluNetParams p;
    p.v = obj.at("v").get<std::vector<double>>();
    p.w = obj.at("w").get<std::vector<double>>();
    p.b = obj.at("b").get<std::vector<double>>();
    p.c0 = obj.at("c0").get<double>();
    p.c1 = obj.at("c1").get<double>();
    if (obj.contains("K") && obj.at("K").get<std::size_t>() != p.width())
        throw std::runtime_error("relu_from_json: K does not match array lengths");
    return p;
}

DataSet read_xy_csv(std::istream& in) {
    std::vector<std::pair<double, double>> points;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.find_first_not_of("xy, \t\r") == std::string::npos) continue;  // header
        }
        std::istringstream row(line);
        std::string xs, ys;
        if (!std::getline(row, xs, ',') || !std::getline(row, ys))
            throw std::runtime_error("read_xy_csv: malformed row: " + line);
        try {
            points.emplace_back(std::stod(xs), std::stod(ys));
        } catch (const std::exception&) {
            throw std::runtime_error("read_xy_csv: malformed number in row: " + line);
        }
    }
    if (points.empty()) throw std::runtime_error("read_xy_csv: no samples");
    std::sort(points.begin(), points.end());
    std::vector<double> x(points.size()), y(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        x[i] = points[i].first;
        y[i] = points[i].second;
        if (i > 0 && !(x[i - 1] < x[i]))
            throw std::runtime_error("read_xy_csv: duplicate abscissa");
    }
    return DataSet(std::move(x), std::move(y));
}

void write_xy_csv(std::ostream& out, const DataSet& data) {
    out << "x,y\n";
    for (std::size_t i = 0; i < data.size(); ++i)
        out << format_double(data.x(i)) << ',' << format_double(data.y(i)) << '\n';
}

void write_envelope_csv(std::ostream& out, const InterpolationInstance& inst, int grid_points,
                        double from, double to) {
    if (grid_points < 2) throw std::invalid_argument("write_envelope_csv: need at least 2 points");
    if (!(from < to)) throw std::invalid_argument("write_envelope_csv: empty range");
    out << "x,lo,hi\n";
    for (int i = 0; i < grid_points; ++i) {
        const double x =
            from + (to - from) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        const auto band = envelope_band(inst, x);
        out << format_double(x) << ',' << format_double(band.lo) << ','
            << format_double(band.hi) << '\n';
    }
}

} // namespace lipreg
