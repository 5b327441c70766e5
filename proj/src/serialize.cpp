#include "cesaro/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace cesaro {

Json zseq_to_json(const ZSeq& f) {
    std::vector<double> re;
    std::vector<double> im;
    re.reserve(f.length());
    im.reserve(f.length());
    for (Complex v : f.values()) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    return Json{{"lo", f.empty() ? 0 : f.lo()}, {"re", re}, {"im", im}};
}

ZSeq zseq_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("lo") || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("sequence JSON must carry lo/re/im");
    const auto lo = j.at("lo").get<std::int64_t>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != im.size())
        throw std::invalid_argument("sequence JSON: re and im lengths differ");
    std::vector<Complex> values(re.size());
    for (std::size_t i = 0; i < re.size(); ++i)
        values[i] = Complex(re[i], im[i]);
    return ZSeq(lo, std::move(values));
}

Json matrix_to_json(const CMatrix& m) {
    const auto d = m.rows();
    std::vector<std::vector<double>> re(static_cast<std::size_t>(d));
    std::vector<std::vector<double>> im(static_cast<std::size_t>(d));
    for (Eigen::Index r = 0; r < d; ++r) {
        re[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(d));
        im[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(d));
        for (Eigen::Index col = 0; col < d; ++col) {
            re[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = m(r, col).real();
            im[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = m(r, col).imag();
        }
    }
    return Json{{"dim", d}, {"re", re}, {"im", im}};
}

CMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("matrix JSON must carry dim/re/im");
    const auto d = j.at("dim").get<std::int64_t>();
    if (d < 1)
        throw std::invalid_argument("matrix JSON: dim must be >= 1");
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    const auto im = j.at("im").get<std::vector<std::vector<double>>>();
    const auto dd = static_cast<std::size_t>(d);
    if (re.size() != dd || im.size() != dd)
        throw std::invalid_argument("matrix JSON: row count does not match dim");
    CMatrix m(d, d);
    for (std::size_t r = 0; r < dd; ++r) {
        if (re[r].size() != dd || im[r].size() != dd)
            throw std::invalid_argument("matrix JSON: column count does not match dim");
        for (std::size_t c = 0; c < dd; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(re[r][c], im[r][c]);
    }
    if (!m.allFinite())
        throw std::invalid_argument("matrix JSON: entries must be finite");
    return m;
}

Json periodic_fn_to_json(const PeriodicFn& fn) { return Json{{"coeffs", zseq_to_json(fn.coeffs)}}; }

PeriodicFn periodic_fn_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw std::invalid_argument("periodic function JSON must carry coeffs");
    return PeriodicFn{zseq_from_json(j.at("coeffs"))};
}

Json curve_to_json(const DecayCurve& curve) {
    Json meta{{"fixture", curve.meta().fixture},
              {"alpha", curve.meta().order},
              {"fn", curve.meta().fn},
              {"notes", curve.meta().notes}};
    Json rows = Json::array();
    for (const auto& row : curve.rows())
        rows.push_back(Json{{"n", row.n}, {"value", row.value}});
    return Json{{"meta", meta}, {"rows", rows}};
}

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

void write_curve_csv(std::ostream& out, const DecayCurve& curve) {
    out << "n,value\n";
    for (const auto& row : curve.rows())
        out << row.n << ',' << format_sci(row.value) << '\n';
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("cannot parse " + path + ": " + e.what());
    }
    return j;
}

} // namespace cesaro
