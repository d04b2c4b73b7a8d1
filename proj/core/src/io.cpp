#include "genray/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace genray {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<double> load_amplitude_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path.string() + "' for reading");
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        char* end = nullptr;
        const double v = std::strtod(t.c_str(), &end);
        if (end == t.c_str() || *end != '\0')
            throw std::invalid_argument("parse error at line " + std::to_string(line_no) +
                                        ": '" + t + "' is not a number");
        if (!(v > 0.0))
            throw std::domain_error("domain error at line " + std::to_string(line_no) +
                                    ": amplitude values must be positive, got " + t);
        values.push_back(v);
    }
    if (values.empty())
        throw std::domain_error("'" + path.string() + "' contains no amplitude values");
    return values;
}

void write_results_csv(const std::vector<CellResult>& cells, const std::filesystem::path& path) {
    if (cells.empty()) throw std::domain_error("write_results_csv: no cells to write");
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
    out << "alpha,sigma,n,bias_alpha,rmse_alpha,bias_sigma,rmse_sigma,trials_completed,"
           "paper_mse_alpha,paper_mse_sigma,flagged\n";
    for (const CellResult& c : cells) {
        out << fmt17(c.alpha) << ',' << fmt17(c.sigma) << ',' << c.n << ','
            << fmt17(c.bias_alpha) << ',' << fmt17(c.rmse_alpha) << ',' << fmt17(c.bias_sigma)
            << ',' << fmt17(c.rmse_sigma) << ',' << c.trials_completed << ','
            << fmt17(c.paper_mse_alpha) << ',' << fmt17(c.paper_mse_sigma) << ','
            << (c.flagged ? 1 : 0) << '\n';
    }
    if (!out) throw io_error("error writing '" + path.string() + "'");
}

std::vector<CellResult> read_results_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path.string() + "' for reading");
    std::string line;
    if (!std::getline(in, line)) throw io_error("'" + path.string() + "' is empty");
    std::vector<CellResult> cells;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> f;
        while (std::getline(ss, field, ',')) f.push_back(field);
        if (f.size() != 11) throw io_error("malformed results row: '" + line + "'");
        CellResult c;
        c.alpha = std::stod(f[0]);
        c.sigma = std::stod(f[1]);
        c.n = std::stoi(f[2]);
        c.bias_alpha = std::stod(f[3]);
        c.rmse_alpha = std::stod(f[4]);
        c.bias_sigma = std::stod(f[5]);
        c.rmse_sigma = std::stod(f[6]);
        c.trials_completed = std::stoi(f[7]);
        c.paper_mse_alpha = std::stod(f[8]);
        c.paper_mse_sigma = std::stod(f[9]);
        c.flagged = std::stoi(f[10]) != 0;
        cells.push_back(c);
    }
    return cells;
}

void write_rmse_svg(const std::vector<CellResult>& cells, const std::filesystem::path& path) {
    if (cells.empty()) throw std::domain_error("write_rmse_svg: no cells to plot");
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path.string() + "' for writing");

    // group by (alpha, sigma), x = n, y = rmse_alpha
    std::map<std::pair<double, double>, std::vector<std::pair<double, double>>> series;
    double x_max = 1.0, y_max = 1e-12;
    for (const CellResult& c : cells) {
        series[{c.alpha, c.sigma}].push_back({static_cast<double>(c.n), c.rmse_alpha});
        x_max = std::max(x_max, static_cast<double>(c.n));
        y_max = std::max(y_max, c.rmse_alpha);
    }
    const double w = 640.0, h = 420.0, ml = 60.0, mr = 20.0, mt = 20.0, mb = 45.0;
    auto sx = [&](double n) { return ml + (w - ml - mr) * n / x_max; };
    auto sy = [&](double v) { return h - mb - (h - mt - mb) * v / (1.1 * y_max); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
        << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
        << h - mb << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << 0.5 * w << "\" y=\"" << h - 10.0
        << "\" text-anchor=\"middle\" font-size=\"13\">sample size n</text>\n"
        << "<text x=\"15\" y=\"" << 0.5 * h
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 15 " << 0.5 * h
        << ")\">RMSE of alpha estimate</text>\n";

    const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                             "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    int idx = 0;
    for (auto& [key, pts] : series) {
        std::sort(pts.begin(), pts.end());
        out << "<polyline fill=\"none\" stroke=\"" << palette[idx % 8]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [n, v] : pts) out << sx(n) << ',' << sy(v) << ' ';
        out << "\"/>\n";
        out << "<text x=\"" << w - mr - 150.0 << "\" y=\"" << mt + 16.0 * (idx + 1)
            << "\" font-size=\"11\" fill=\"" << palette[idx % 8] << "\">alpha=" << key.first
            << " sigma=" << key.second << "</text>\n";
        ++idx;
    }
    out << "</svg>\n";
    if (!out) throw io_error("error writing '" + path.string() + "'");
}

void emit_results(const std::vector<CellResult>& cells, const std::filesystem::path& csv_path,
                  const std::optional<std::filesystem::path>& svg_path) {
    write_results_csv(cells, csv_path);
    if (svg_path) write_rmse_svg(cells, *svg_path);
}

}  // namespace genray
