#include "dapg/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dapg::io {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return in;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw std::invalid_argument(path + ": " + what);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

struct CsvTable {
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path, const std::string& expected_header,
                  size_t ncols) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) schema_error(path, "empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header) {
        schema_error(path, "header is \"" + line + "\", expected \"" + expected_header + "\"");
    }
    CsvTable table;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != ncols) {
            schema_error(path, "row " + std::to_string(lineno) + " has " +
                                   std::to_string(fields.size()) + " fields, expected " +
                                   std::to_string(ncols));
        }
        std::vector<double> row;
        for (const auto& f : fields) {
            try {
                size_t pos = 0;
                row.push_back(std::stod(f, &pos));
                if (pos != f.size()) throw std::invalid_argument(f);
            } catch (const std::exception&) {
                schema_error(path, "row " + std::to_string(lineno) +
                                       ": non-numeric field \"" + f + "\"");
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

const json& require(const json& j, const char* key, const std::string& ctx) {
    if (!j.contains(key)) {
        throw std::invalid_argument(ctx + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

Eigen::MatrixXd parse_matrix(const json& arr, int d, const std::string& ctx) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != d) {
        throw std::invalid_argument(ctx + ": expected " + std::to_string(d) + " rows");
    }
    Eigen::MatrixXd m(d, d);
    for (int r = 0; r < d; ++r) {
        const json& row = arr.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != d) {
            throw std::invalid_argument(ctx + ": row " + std::to_string(r) + " must hold " +
                                        std::to_string(d) + " numbers");
        }
        for (int c = 0; c < d; ++c) {
            if (!row.at(c).is_number()) {
                throw std::invalid_argument(ctx + ": non-numeric entry at (" +
                                            std::to_string(r) + "," + std::to_string(c) + ")");
            }
            m(r, c) = row.at(c).get<double>();
        }
    }
    return m;
}

}  // namespace

nlohmann::json operator_to_json(const Operator& op) {
    const int d = static_cast<int>(op.rows());
    json re = json::array(), im = json::array();
    for (int r = 0; r < d; ++r) {
        json re_row = json::array(), im_row = json::array();
        for (int c = 0; c < d; ++c) {
            re_row.push_back(op(r, c).real());
            im_row.push_back(op(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"d", d}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Operator operator_from_json(const nlohmann::json& j) {
    const std::string ctx = "operator JSON";
    const json& dj = require(j, "d", ctx);
    if (!dj.is_number_integer() || dj.get<int>() < 1) {
        throw std::invalid_argument(ctx + ": \"d\" must be a positive integer");
    }
    const int d = dj.get<int>();
    const Eigen::MatrixXd re = parse_matrix(require(j, "re", ctx), d, ctx + " \"re\"");
    const Eigen::MatrixXd im = parse_matrix(require(j, "im", ctx), d, ctx + " \"im\"");
    Operator op(d, d);
    op.real() = re;
    op.imag() = im;
    return op;
}

nlohmann::json ket_to_json(const Ket& psi) {
    json re = json::array(), im = json::array();
    for (int n = 0; n < psi.size(); ++n) {
        re.push_back(psi(n).real());
        im.push_back(psi(n).imag());
    }
    return json{{"d", static_cast<int>(psi.size())}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Ket ket_from_json(const nlohmann::json& j) {
    const std::string ctx = "ket JSON";
    const int d = require(j, "d", ctx).get<int>();
    const json& re = require(j, "re", ctx);
    const json& im = require(j, "im", ctx);
    if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d) {
        throw std::invalid_argument(ctx + ": amplitude arrays must hold d = " +
                                    std::to_string(d) + " numbers");
    }
    Ket psi(d);
    for (int n = 0; n < d; ++n) {
        psi(n) = cplx(re.at(n).get<double>(), im.at(n).get<double>());
    }
    return psi;
}

void write_operator(const std::string& path, const Operator& op) {
    write_json_file(path, operator_to_json(op));
}

Operator read_operator(const std::string& path) {
    try {
        return operator_from_json(read_json_file(path));
    } catch (const std::invalid_argument& e) {
        schema_error(path, e.what());
    }
}

void write_quasi_csv(const std::string& path, const QuasiDistribution& v, const Geometry& g) {
    auto out = open_out(path);
    out << "line_index,m_minus1,m0,value\n";
    for (int j = 0; j < g.num_lines(); ++j) {
        const Line l = g.line_at(j);
        out << j << ',' << l.m_minus1 << ',' << l.m0 << ',' << fmt17(v.values(j)) << '\n';
    }
}

QuasiDistribution read_quasi_csv(const std::string& path) {
    const CsvTable t = read_csv(path, "line_index,m_minus1,m0,value", 4);
    const int n = static_cast<int>(t.rows.size());
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (d < 3 || d * d != n) {
        schema_error(path, std::to_string(n) + " rows do not form a full d^2 line set");
    }
    QuasiDistribution v{d, Eigen::VectorXd::Constant(n, std::nan(""))};
    for (const auto& row : t.rows) {
        const int idx = static_cast<int>(row[0]);
        if (idx < 0 || idx >= n) schema_error(path, "line_index out of range");
        if (static_cast<int>(row[1]) != idx / d || static_cast<int>(row[2]) != idx % d) {
            schema_error(path, "line_index " + std::to_string(idx) +
                                   " disagrees with (m_minus1, m0)");
        }
        if (!std::isnan(v.values(idx))) {
            schema_error(path, "duplicate line_index " + std::to_string(idx));
        }
        v.values(idx) = row[3];
    }
    return v;
}

void write_marginals_csv(const std::string& path, const PointMarginals& p, const Geometry& g) {
    auto out = open_out(path);
    out << "point_index,m,b,value\n";
    for (int pi = 0; pi < g.num_points(); ++pi) {
        const Point a = g.point_at(pi);
        out << pi << ',' << a.m << ',' << a.b << ',' << fmt17(p.values(pi)) << '\n';
    }
}

PointMarginals read_marginals_csv(const std::string& path) {
    const CsvTable t = read_csv(path, "point_index,m,b,value", 4);
    const int n = static_cast<int>(t.rows.size());
    // n = d(d+1)
    const int d = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
    if (d < 3 || d * (d + 1) != n) {
        schema_error(path, std::to_string(n) + " rows do not form a full d(d+1) point set");
    }
    PointMarginals p{d, Eigen::VectorXd::Constant(n, std::nan(""))};
    for (const auto& row : t.rows) {
        const int idx = static_cast<int>(row[0]);
        if (idx < 0 || idx >= n) schema_error(path, "point_index out of range");
        if (static_cast<int>(row[1]) != idx % d || static_cast<int>(row[2]) != idx / d - 1) {
            schema_error(path, "point_index " + std::to_string(idx) +
                                   " disagrees with (m, b)");
        }
        if (!std::isnan(p.values(idx))) {
            schema_error(path, "duplicate point_index " + std::to_string(idx));
        }
        p.values(idx) = row[3];
    }
    return p;
}

void write_incidence_csv(const std::string& path, const Geometry& g) {
    auto out = open_out(path);
    out << "line_index,m_minus1,m0,b,m\n";
    for (int j = 0; j < g.num_lines(); ++j) {
        const Line l = g.line_at(j);
        for (const Point& a : g.points_on_line(l)) {
            out << j << ',' << l.m_minus1 << ',' << l.m0 << ',' << a.b << ',' << a.m << '\n';
        }
    }
}

void write_lambda_csv(const std::string& path, const Geometry& g) {
    auto out = open_out(path);
    out << "point_index,line_index,lambda\n";
    const Eigen::MatrixXd lam = lambda_matrix(g);
    for (int pi = 0; pi < g.num_points(); ++pi) {
        for (int j = 0; j < g.num_lines(); ++j) {
            out << pi << ',' << j << ',' << static_cast<int>(lam(pi, j)) << '\n';
        }
    }
}

nlohmann::json record_to_json(const MeasurementRecord& rec) {
    json counts = json::object();
    for (int b = -1; b < rec.d; ++b) {
        counts[std::to_string(b)] = rec.counts[b + 1];
    }
    return json{{"d", rec.d}, {"shots", rec.shots}, {"counts", std::move(counts)}};
}

MeasurementRecord record_from_json(const nlohmann::json& j) {
    const std::string ctx = "measurement record JSON";
    MeasurementRecord rec;
    rec.d = require(j, "d", ctx).get<int>();
    rec.shots = require(j, "shots", ctx).get<long long>();
    if (rec.d < 3) throw std::invalid_argument(ctx + ": d must be at least 3");
    if (rec.shots < 1) throw std::invalid_argument(ctx + ": shots must be >= 1");
    const json& counts = require(j, "counts", ctx);
    rec.counts.assign(rec.d + 1, {});
    for (int b = -1; b < rec.d; ++b) {
        const std::string key = std::to_string(b);
        if (!counts.contains(key)) {
            throw std::invalid_argument(ctx + ": missing counts for basis " + key);
        }
        const json& arr = counts.at(key);
        if (!arr.is_array() || static_cast<int>(arr.size()) != rec.d) {
            throw std::invalid_argument(ctx + ": counts[" + key + "] must hold d = " +
                                        std::to_string(rec.d) + " entries");
        }
        long long total = 0;
        for (const auto& e : arr) {
            const long long n = e.get<long long>();
            if (n < 0) throw std::invalid_argument(ctx + ": negative count in basis " + key);
            rec.counts[b + 1].push_back(n);
            total += n;
        }
        if (total != rec.shots) {
            throw std::invalid_argument(ctx + ": counts[" + key + "] sum to " +
                                        std::to_string(total) + ", expected shots = " +
                                        std::to_string(rec.shots));
        }
    }
    return rec;
}

void write_record(const std::string& path, const MeasurementRecord& rec) {
    write_json_file(path, record_to_json(rec));
}

MeasurementRecord read_record(const std::string& path) {
    try {
        return record_from_json(read_json_file(path));
    } catch (const std::invalid_argument& e) {
        schema_error(path, e.what());
    }
}

nlohmann::json report_to_json(const ReconstructionReport& rep, bool exact) {
    json j;
    j["d"] = static_cast<int>(rep.rho_hat.rows());
    j["shots"] = exact ? json(nullptr) : json(rep.shots);
    j["fidelity"] = rep.fidelity;
    j["trace_distance"] = rep.trace_distance;
    j["min_eigenvalue"] = rep.min_eigenvalue;
    j["rho_hat"] = operator_to_json(rep.rho_hat);
    return j;
}

nlohmann::json quasi_to_json(const QuasiDistribution& v) {
    return json{{"d", v.d},
                {"values", std::vector<double>(v.values.data(), v.values.data() + v.values.size())}};
}

nlohmann::json marginals_to_json(const PointMarginals& p) {
    return json{{"d", p.d},
                {"values", std::vector<double>(p.values.data(), p.values.data() + p.values.size())}};
}

nlohmann::json verify_report_json(const AxiomReport& axioms, const IdentityReport& identities) {
    json checks = json::array();
    for (const auto& c : axioms.checks) {
        json e{{"name", c.name}, {"pass", c.pass}, {"max_dev", static_cast<double>(c.violations)}};
        if (!c.pass) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    for (const auto& c : identities.checks) {
        json e{{"name", c.name}, {"pass", c.pass}, {"max_dev", c.max_dev}};
        if (!c.pass) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    return json{{"d", axioms.d}, {"checks", std::move(checks)}};
}

nlohmann::json read_json_file(const std::string& path) {
    auto in = open_in(path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        schema_error(path, std::string("not valid JSON (") + e.what() + ")");
    }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

}  // namespace dapg::io
