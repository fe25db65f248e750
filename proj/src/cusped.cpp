#include "surgeon/cusped.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace surgeon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::complex<double> translation(const Slope& s, const CuspShape& c) {
    return double(s.p) * c.mu + double(s.q) * c.lambda;
}

} // namespace

Slope Slope::make(long long p, long long q) {
    if (p == 0 && q == 0) throw invalid_multislope("slope (0,0)");
    long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    Slope s;
    s.empty = false;
    s.p = p;
    s.q = q;
    return s;
}

Slope slope_from_rational(const ExtRational& x) {
    return Slope::make(x.num, x.den);
}

bool IsometryAction::is_identity() const {
    for (std::size_t j = 0; j < perm.size(); ++j)
        if (perm[j] != int(j)) return false;
    for (const auto& m : maps) {
        bool plus = m == std::array<long long, 4>{1, 0, 0, 1};
        bool minus = m == std::array<long long, 4>{-1, 0, 0, -1};
        if (!plus && !minus) return false;
    }
    return true;
}

double cusp_area(const CuspShape& c) {
    double area = std::abs(std::imag(std::conj(c.mu) * c.lambda));
    if (area == 0.0) throw invalid_cusp("degenerate cusp shape");
    return area;
}

double normalized_length(const Slope& s, const CuspShape& c) {
    double area = cusp_area(c);
    if (s.empty) return kInf;
    return std::abs(translation(s, c)) / std::sqrt(area);
}

double multislope_length(const Multislope& ms, const std::vector<CuspShape>& cusps) {
    if (ms.slopes.size() != cusps.size())
        throw invalid_multislope("multislope length does not match cusp count");
    double recip_sq = 0.0;
    for (std::size_t j = 0; j < ms.slopes.size(); ++j) {
        if (ms.slopes[j].empty) continue; // contributes 0
        double len = normalized_length(ms.slopes[j], cusps[j]);
        recip_sq += 1.0 / (len * len);
    }
    if (recip_sq == 0.0) return kInf;
    return 1.0 / std::sqrt(recip_sq);
}

std::vector<Slope> enumerate_short_slopes(const CuspShape& c, double max_length) {
    double area = cusp_area(c);
    double scale = max_length / std::sqrt(area);
    long long pmax = llround(std::ceil(scale * std::abs(c.lambda))) + 1;
    long long qmax = llround(std::ceil(scale * std::abs(c.mu))) + 1;

    std::vector<std::pair<double, Slope>> found;
    for (long long q = 0; q <= qmax; ++q) {
        for (long long p = (q == 0 ? 1 : -pmax); p <= pmax; ++p) {
            if (q == 0 && p != 1) continue;
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            Slope s = Slope::make(p, q);
            double len = normalized_length(s, c);
            if (len <= max_length) found.emplace_back(len, s);
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        if (a.second.p != b.second.p) return a.second.p < b.second.p;
        return a.second.q < b.second.q;
    });
    std::vector<Slope> out;
    out.reserve(found.size());
    for (auto& [len, s] : found) out.push_back(s);
    return out;
}

bool exceeds_hk_bound(double length) {
    return length > hk_length_bound;
}

bool hk_certify(const Multislope& ms, const std::vector<CuspShape>& cusps) {
    if (ms.slopes.size() != cusps.size())
        throw invalid_multislope("multislope does not match cusp count");
    for (std::size_t j = 0; j < ms.slopes.size(); ++j) {
        if (ms.slopes[j].empty) continue;
        if (!exceeds_hk_bound(normalized_length(ms.slopes[j], cusps[j]))) return false;
    }
    return true;
}

Multislope apply_isometry(const IsometryAction& g, const Multislope& ms) {
    if (g.perm.size() != ms.slopes.size() || g.maps.size() != ms.slopes.size())
        throw invalid_multislope("isometry dimension mismatch");
    Multislope out;
    out.slopes.resize(ms.slopes.size());
    for (std::size_t j = 0; j < ms.slopes.size(); ++j) {
        const Slope& s = ms.slopes[j];
        if (s.empty) {
            out.slopes[g.perm[j]] = Slope::none();
            continue;
        }
        const auto& m = g.maps[j];
        out.slopes[g.perm[j]] = Slope::make(m[0] * s.p + m[1] * s.q, m[2] * s.p + m[3] * s.q);
    }
    return out;
}

bool is_symmetry_breaking(const Multislope& ms, const CuspedManifoldData& data) {
    if (ms.slopes.size() != data.cusps.size())
        throw invalid_multislope("multislope does not match cusp count");
    for (const auto& g : data.isometries) {
        if (g.is_identity()) continue;
        if (apply_isometry(g, ms) == ms) return false;
    }
    return true;
}

Multislope family_multislope(const ExtRational& r, const ExtRational& s, const ExtRational& b,
                             long long k) {
    if (b == ExtRational(0))
        throw unsupported_parameters("b = 0 conflicts with the 1+1/b filling convention");
    Multislope ms;
    ms.slopes.push_back(Slope::none());
    ms.slopes.push_back(slope_from_rational(r - ExtRational(k)));
    ms.slopes.push_back(slope_from_rational(ExtRational(1) + s));
    ms.slopes.push_back(slope_from_rational(ExtRational(1) + reciprocal(b)));
    ms.slopes.push_back(slope_from_rational(-reciprocal(ExtRational(k))));
    return ms;
}

CuspedManifoldData load_manifold_data(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad manifold data: ") + e.what());
    }
    CuspedManifoldData data;
    try {
        data.name = doc.at("name").get<std::string>();
        for (const auto& c : doc.at("cusps")) {
            CuspShape shape;
            shape.mu = {c.at("mu").at(0).get<double>(), c.at("mu").at(1).get<double>()};
            shape.lambda = {c.at("lambda").at(0).get<double>(), c.at("lambda").at(1).get<double>()};
            try {
                cusp_area(shape);
            } catch (const invalid_cusp&) {
                throw parse_error("degenerate cusp shape in manifold data");
            }
            data.cusps.push_back(shape);
        }
        const int m = int(data.cusps.size());
        if (m == 0) throw parse_error("manifold data has no cusps");
        for (const auto& iso : doc.value("isometries", nlohmann::json::array())) {
            IsometryAction g;
            for (const auto& v : iso.at("perm")) g.perm.push_back(v.get<int>());
            if (int(g.perm.size()) != m) throw parse_error("perm length != cusp count");
            std::vector<bool> seen(m, false);
            for (int v : g.perm) {
                if (v < 0 || v >= m || seen[v]) throw parse_error("perm is not a permutation");
                seen[v] = true;
            }
            for (const auto& mat : iso.at("maps")) {
                std::array<long long, 4> a{mat.at(0).at(0).get<long long>(),
                                           mat.at(0).at(1).get<long long>(),
                                           mat.at(1).at(0).get<long long>(),
                                           mat.at(1).at(1).get<long long>()};
                long long det = a[0] * a[3] - a[1] * a[2];
                if (det != 1 && det != -1) throw parse_error("peripheral map is not unimodular");
                g.maps.push_back(a);
            }
            if (int(g.maps.size()) != m) throw parse_error("maps length != cusp count");
            g.orientation = iso.at("orientation").get<int>();
            if (g.orientation != 1 && g.orientation != -1)
                throw parse_error("orientation must be 1 or -1");
            data.isometries.push_back(std::move(g));
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad manifold data: ") + e.what());
    }
    return data;
}

CuspedManifoldData load_manifold_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_manifold_data(ss.str());
}

Multislope parse_multislope(const std::string& text) {
    Multislope ms;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        std::string s;
        for (char ch : item)
            if (ch != ' ') s.push_back(ch);
        if (s.empty()) continue;
        if (s == "*")
            ms.slopes.push_back(Slope::none());
        else
            ms.slopes.push_back(slope_from_rational(parse_ext_rational(s)));
    }
    if (ms.slopes.empty()) throw parse_error("empty multislope: '" + text + "'");
    return ms;
}

std::string to_string(const Multislope& ms) {
    std::string out;
    for (std::size_t i = 0; i < ms.slopes.size(); ++i) {
        if (i) out += ",";
        const Slope& s = ms.slopes[i];
        if (s.empty)
            out += "*";
        else
            out += std::to_string(s.p) + "/" + std::to_string(s.q);
    }
    return out;
}

} // namespace surgeon
