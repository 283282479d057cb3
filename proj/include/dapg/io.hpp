#pragma once

#include "dapg/line_operators.hpp"
#include "dapg/phase_space.hpp"
#include "dapg/tomography.hpp"

#include <json.hpp>

#include <string>

namespace dapg::io {

// Operator JSON: {"d": n, "re": [[row-major]], "im": [[row-major]]};
// kets use one-dimensional "re"/"im" arrays. CSV numeric fields carry 17
// significant digits so doubles round-trip losslessly.

nlohmann::json operator_to_json(const Operator& op);
Operator operator_from_json(const nlohmann::json& j);
nlohmann::json ket_to_json(const Ket& psi);
Ket ket_from_json(const nlohmann::json& j);

void write_operator(const std::string& path, const Operator& op);
Operator read_operator(const std::string& path);

// quasi-distribution CSV: line_index,m_minus1,m0,value
void write_quasi_csv(const std::string& path, const QuasiDistribution& v, const Geometry& g);
QuasiDistribution read_quasi_csv(const std::string& path);

// point-marginals CSV: point_index,m,b,value
void write_marginals_csv(const std::string& path, const PointMarginals& p, const Geometry& g);
PointMarginals read_marginals_csv(const std::string& path);

// incidence table CSV: line_index,m_minus1,m0,b,m (one row per point on line)
void write_incidence_csv(const std::string& path, const Geometry& g);

// incidence-indicator CSV: point_index,line_index,lambda
void write_lambda_csv(const std::string& path, const Geometry& g);

// measurement record JSON: {"d":…, "shots":…, "counts": {"-1":[…], "0":[…], …}}
nlohmann::json record_to_json(const MeasurementRecord& rec);
MeasurementRecord record_from_json(const nlohmann::json& j);
void write_record(const std::string& path, const MeasurementRecord& rec);
MeasurementRecord read_record(const std::string& path);

// reconstruction report JSON: scalar metrics plus rho_hat as operator JSON;
// "shots" is null when the marginals were exact
nlohmann::json report_to_json(const ReconstructionReport& rep, bool exact);

// JSON vector encodings used by the CLI --format json mode
nlohmann::json quasi_to_json(const QuasiDistribution& v);
nlohmann::json marginals_to_json(const PointMarginals& p);

// verification report: {"d":…, "checks":[{"name":…, "pass":…, "max_dev":…}]};
// axiom entries report their violation count as max_dev
nlohmann::json verify_report_json(const AxiomReport& axioms, const IdentityReport& identities);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace dapg::io
