/*
   Copyright 2026 the logconn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOGCONN_IO_HPP
#define LOGCONN_IO_HPP

#include <logconn/criterion.hpp>
#include <logconn/synth.hpp>

#include <json.hpp>

#include <sstream>
#include <string>

namespace logconn {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

// ---------------------------------------------------------------- parsing

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& path, const std::string& what) {
    throw parse_error(path + ": " + what);
}

inline const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) parse_fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) parse_fail(path, std::string("missing field '") + key + "'");
    return *it;
}

inline void check_version(const Json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("version")) return;
    const Json& v = j["version"];
    if (!v.is_string() || v.get<std::string>() != kSchemaVersion)
        parse_fail(path + ".version", std::string("unsupported schema version, expected \"") +
                                          kSchemaVersion + "\"");
}

inline Scalar scalar_at(const Json& j, const std::string& path) {
    if (!j.is_string()) parse_fail(path, "expected a rational as a string \"p/q\"");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        parse_fail(path, e.what());
    }
}

inline Poly poly_at(const Json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected a coefficient array (low to high)");
    std::vector<Scalar> c;
    c.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
        c.push_back(scalar_at(j[k], path + "[" + std::to_string(k) + "]"));
    return Poly(std::move(c));
}

inline OneForm oneform_at(const Json& j, const std::string& path) {
    const Poly numer = poly_at(field(j, "numer", path), path + ".numer");
    const Poly denom = poly_at(field(j, "denom", path), path + ".denom");
    if (denom.is_zero()) parse_fail(path + ".denom", "denominator is the zero polynomial");
    return OneForm(numer, denom);
}

inline Mat<Scalar> scalar_matrix_at(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) parse_fail(path, "expected a non-empty matrix (array of rows)");
    const int rows = static_cast<int>(j.size());
    const Json& first = j[0];
    if (!first.is_array() || first.empty()) parse_fail(path + "[0]", "expected a non-empty row");
    const int cols = static_cast<int>(first.size());
    Mat<Scalar> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        const std::string rpath = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            parse_fail(rpath, "ragged matrix row");
        for (int k = 0; k < cols; ++k)
            m(i, k) = scalar_at(row[static_cast<std::size_t>(k)], rpath + "[" + std::to_string(k) + "]");
    }
    return m;
}

inline std::vector<int> degrees_at(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) parse_fail(path, "expected a non-empty array of integers");
    std::vector<int> d;
    d.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        const Json& e = j[k];
        if (!e.is_number_integer())
            parse_fail(path + "[" + std::to_string(k) + "]", "expected an integer");
        d.push_back(e.get<int>());
    }
    return d;
}

inline MarkedPoints points_at(const Json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected an array of rationals as strings");
    std::vector<Scalar> pts;
    pts.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
        pts.push_back(scalar_at(j[k], path + "[" + std::to_string(k) + "]"));
    return MarkedPoints(std::move(pts));
}

} // namespace detail

inline Instance parse_instance(const Json& j) {
    detail::check_version(j, "$");
    const std::vector<int> degrees = detail::degrees_at(detail::field(j, "splitting_type", "$"), "$.splitting_type");
    const MarkedPoints points = detail::points_at(detail::field(j, "points", "$"), "$.points");
    ResidueData residues;
    if (j.is_object() && j.contains("residues")) {
        const Json& res = j["residues"];
        if (!res.is_object()) detail::parse_fail("$.residues", "expected an object keyed by point");
        for (auto it = res.begin(); it != res.end(); ++it) {
            const std::string path = "$.residues[\"" + it.key() + "\"]";
            Scalar x;
            try {
                x = parse_scalar(it.key());
            } catch (const std::invalid_argument& e) {
                detail::parse_fail(path, e.what());
            }
            if (!points.contains(x)) detail::parse_fail(path, "key is not a marked point");
            if (residues.contains(x)) detail::parse_fail(path, "duplicate residue key");
            residues.set(x, detail::scalar_matrix_at(*it, path));
        }
    }
    return validate_instance(degrees, points, residues);
}

inline Instance parse_instance(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("$: not valid JSON");
    return parse_instance(j);
}

inline ConnectionPresentation parse_certificate(const Json& j) {
    detail::check_version(j, "$");
    const std::vector<int> degrees = detail::degrees_at(detail::field(j, "splitting_type", "$"), "$.splitting_type");
    const MarkedPoints points = detail::points_at(detail::field(j, "points", "$"), "$.points");
    const SplittingType st(degrees);
    const int r = st.rank();
    const Json& om = detail::field(j, "omega0", "$");
    if (!om.is_array() || static_cast<int>(om.size()) != r)
        detail::parse_fail("$.omega0", "expected " + std::to_string(r) + " rows");
    Mat<OneForm> omega0(r, r);
    for (int i = 0; i < r; ++i) {
        const Json& row = om[static_cast<std::size_t>(i)];
        const std::string rpath = "$.omega0[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != r)
            detail::parse_fail(rpath, "expected " + std::to_string(r) + " entries");
        for (int k = 0; k < r; ++k)
            omega0(i, k) = detail::oneform_at(row[static_cast<std::size_t>(k)],
                                              rpath + "[" + std::to_string(k) + "]");
    }
    return ConnectionPresentation{st, points, std::move(omega0)};
}

inline ConnectionPresentation parse_certificate(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("$: not valid JSON");
    return parse_certificate(j);
}

// ------------------------------------------------------------- serializing

inline Json poly_to_json(const Poly& p) {
    Json a = Json::array();
    for (const Scalar& c : p.coeffs()) a.push_back(scalar_to_string(c));
    return a;
}

inline Json oneform_to_json(const OneForm& f) {
    Json j;
    j["numer"] = poly_to_json(f.numer());
    j["denom"] = poly_to_json(f.denom());
    return j;
}

inline Json scalar_matrix_to_json(const Mat<Scalar>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json instance_to_json(const Instance& inst) {
    Json j;
    j["version"] = kSchemaVersion;
    j["splitting_type"] = inst.splitting.degrees();
    Json pts = Json::array();
    for (const Scalar& x : inst.points.points()) pts.push_back(scalar_to_string(x));
    j["points"] = std::move(pts);
    Json res = Json::object();
    for (const Scalar& x : inst.points.points())
        res[scalar_to_string(x)] = scalar_matrix_to_json(inst.residues.at(x));
    j["residues"] = std::move(res);
    return j;
}

inline Json certificate_to_json(const ConnectionPresentation& conn) {
    Json j;
    j["version"] = kSchemaVersion;
    j["splitting_type"] = conn.splitting.degrees();
    Json pts = Json::array();
    for (const Scalar& x : conn.points.points()) pts.push_back(scalar_to_string(x));
    j["points"] = std::move(pts);
    Json rows = Json::array();
    for (int i = 0; i < conn.omega0.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < conn.omega0.cols(); ++k) row.push_back(oneform_to_json(conn.omega0(i, k)));
        rows.push_back(std::move(row));
    }
    j["omega0"] = std::move(rows);
    return j;
}

inline Json obstruction_report_to_json(const ObstructionReport& rep) {
    Json j;
    j["version"] = kSchemaVersion;
    j["exists"] = rep.exists;
    Json vals = Json::array();
    for (const auto& e : rep.values) {
        Json v;
        v["basis"] = e.basis;
        v["value"] = scalar_to_string(e.value);
        vals.push_back(std::move(v));
    }
    j["values"] = std::move(vals);
    return j;
}

inline Json verify_report_to_json(const VerifyReport& rep) {
    Json j;
    j["version"] = kSchemaVersion;
    j["pass"] = rep.pass();
    Json checks = Json::array();
    const auto one = [&](const char* name, bool ok) {
        Json c;
        c["name"] = name;
        c["pass"] = ok;
        Json fails = Json::array();
        for (const VerifyFailure& f : rep.failures) {
            if (f.check != name) continue;
            Json g;
            g["row"] = f.row;
            g["col"] = f.col;
            if (!f.point.empty()) g["point"] = f.point;
            g["detail"] = f.detail;
            fails.push_back(std::move(g));
        }
        c["failures"] = std::move(fails);
        checks.push_back(std::move(c));
    };
    one("PoleDiscipline", rep.pole_discipline);
    one("ResidueMatch", rep.residue_match);
    one("ChartHolomorphy", rep.chart_holomorphy);
    j["checks"] = std::move(checks);
    return j;
}

// ---------------------------------------------------------- text rendering

inline std::string format_poly(const Poly& p, const std::string& var = "z") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        const Scalar& c = p.coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        const Scalar mag = abs(c);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        const bool unit = (mag == 1);
        if (k == 0) {
            s += scalar_to_string(mag);
        } else {
            if (!unit) s += scalar_to_string(mag) + "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

inline std::string format_oneform(const OneForm& f, const std::string& var = "z") {
    if (f.is_zero()) return "0";
    std::string s = "(" + format_poly(f.numer(), var) + ")";
    if (f.denom().degree() > 0) s += "/(" + format_poly(f.denom(), var) + ")";
    return s + " d" + var;
}

inline std::string format_scalar_matrix(const Mat<Scalar>& m, const std::string& indent = "  ") {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ", ";
            os << scalar_to_string(m(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

inline std::string certificate_to_text(const ConnectionPresentation& conn) {
    std::ostringstream os;
    os << "splitting type: (";
    for (std::size_t i = 0; i < conn.splitting.degrees().size(); ++i) {
        if (i > 0) os << ", ";
        os << conn.splitting.degrees()[i];
    }
    os << ")\npoints: {";
    for (std::size_t i = 0; i < conn.points.points().size(); ++i) {
        if (i > 0) os << ", ";
        os << scalar_to_string(conn.points.points()[i]);
    }
    os << "}\nomega0:\n";
    for (int i = 0; i < conn.omega0.rows(); ++i) {
        os << "  [";
        for (int j = 0; j < conn.omega0.cols(); ++j) {
            if (j > 0) os << ",  ";
            os << format_oneform(conn.omega0(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

inline std::string obstruction_report_to_text(const ObstructionReport& rep) {
    std::ostringstream os;
    os << "exists: " << (rep.exists ? "true" : "false") << "\n";
    os << "obstruction values:\n";
    for (const auto& e : rep.values) os << "  " << e.basis << " = " << scalar_to_string(e.value) << "\n";
    return os.str();
}

inline std::string verify_report_to_text(const VerifyReport& rep) {
    std::ostringstream os;
    const auto one = [&](const char* name, bool ok) {
        os << name << ": " << (ok ? "pass" : "fail") << "\n";
        for (const VerifyFailure& f : rep.failures) {
            if (f.check != name) continue;
            os << "  ";
            if (f.row > 0) os << "entry [" << f.row << "," << f.col << "] ";
            if (!f.point.empty()) os << "at point " << f.point << " ";
            os << "- " << f.detail << "\n";
        }
    };
    one("PoleDiscipline", rep.pole_discipline);
    one("ResidueMatch", rep.residue_match);
    one("ChartHolomorphy", rep.chart_holomorphy);
    os << "result: " << (rep.pass() ? "pass" : "fail") << "\n";
    return os.str();
}

// --------------------------------------------------------- latex rendering

inline std::string latex_scalar(const Scalar& s) {
    if (scalar_is_integer(s)) return scalar_to_string(s);
    const std::string sign = s < 0 ? "-" : "";
    const Scalar mag = abs(s);
    return sign + "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
}

inline std::string latex_poly(const Poly& p, const std::string& var = "z") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        const Scalar& c = p.coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        const Scalar mag = abs(c);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (k == 0) {
            s += latex_scalar(mag);
        } else {
            if (mag != 1) s += latex_scalar(mag) + " ";
            s += var;
            if (k > 1) s += "^{" + std::to_string(k) + "}";
        }
    }
    return s;
}

inline std::string latex_oneform(const OneForm& f, const std::string& var = "z") {
    if (f.is_zero()) return "0";
    if (f.denom().degree() == 0) return "\\left(" + latex_poly(f.numer(), var) + "\\right)\\,d" + var;
    return "\\frac{" + latex_poly(f.numer(), var) + "}{" + latex_poly(f.denom(), var) + "}\\,d" + var;
}

inline std::string certificate_to_latex(const ConnectionPresentation& conn) {
    std::ostringstream os;
    os << "\\omega_0 = \\begin{pmatrix}\n";
    for (int i = 0; i < conn.omega0.rows(); ++i) {
        os << "  ";
        for (int j = 0; j < conn.omega0.cols(); ++j) {
            if (j > 0) os << " & ";
            os << latex_oneform(conn.omega0(i, j));
        }
        os << (i + 1 < conn.omega0.rows() ? " \\\\" : "") << "\n";
    }
    os << "\\end{pmatrix}\n";
    return os.str();
}

inline std::string obstruction_report_to_latex(const ObstructionReport& rep) {
    std::ostringstream os;
    os << "\\begin{tabular}{ll}\n\\hline\nbasis & value \\\\\n\\hline\n";
    for (const auto& e : rep.values)
        os << "$" << e.basis << "$ & $" << latex_scalar(e.value) << "$ \\\\\n";
    os << "\\hline\n\\multicolumn{2}{l}{exists: " << (rep.exists ? "true" : "false")
       << "}\\\\\n\\end{tabular}\n";
    return os.str();
}

} // namespace logconn

#endif
