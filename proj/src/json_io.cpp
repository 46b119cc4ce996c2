#include "ttolab/json_io.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>

namespace ttolab {

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidArgument("complex values must be [re, im] number pairs");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Json blaschke_to_json(const FiniteBlaschke& B) {
    Json zeros = Json::array();
    for (const auto& a : B.zeros()) zeros.push_back(complex_to_json(a.value()));
    Json out;
    out["zeros"] = std::move(zeros);
    out["gamma"] = std::arg(B.front_constant());
    out["mode"] = B.mode() == NormalizationMode::Plain ? "plain" : "normalized";
    return out;
}

FiniteBlaschke blaschke_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("zeros") || !j["zeros"].is_array()) {
        throw InvalidArgument("blaschke object needs a \"zeros\" array");
    }
    std::vector<UnitDiskPoint> zeros;
    zeros.reserve(j["zeros"].size());
    for (const auto& z : j["zeros"]) zeros.emplace_back(complex_from_json(z));
    Complex front(1.0, 0.0);
    if (j.contains("gamma")) {
        if (!j["gamma"].is_number()) throw InvalidArgument("\"gamma\" must be a number");
        front = std::polar(1.0, j["gamma"].get<double>());
    }
    NormalizationMode mode = NormalizationMode::Plain;
    if (j.contains("mode")) {
        const std::string m = j["mode"].get<std::string>();
        if (m == "plain") {
            mode = NormalizationMode::Plain;
        } else if (m == "normalized") {
            mode = NormalizationMode::Normalized;
        } else {
            throw InvalidArgument("mode must be \"plain\" or \"normalized\"");
        }
    }
    return FiniteBlaschke(std::move(zeros), front, mode);
}

Json basis_to_json(const BasisDescriptor& basis) {
    Json out;
    out["blaschke"] = blaschke_to_json(basis.blaschke);
    switch (basis.tag) {
        case BasisTag::Kernel: out["basis"] = "kernel"; break;
        case BasisTag::Monomial: out["basis"] = "monomial"; break;
        case BasisTag::Example3: out["basis"] = "example3"; break;
    }
    return out;
}

BasisDescriptor basis_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("blaschke")) {
        throw InvalidArgument("basis object needs a \"blaschke\" member");
    }
    FiniteBlaschke B = blaschke_from_json(j["blaschke"]);
    std::string tag = "kernel";
    if (j.contains("basis")) tag = j["basis"].get<std::string>();
    if (tag == "kernel") return BasisDescriptor::kernel(std::move(B));
    if (tag == "monomial") {
        for (const auto& a : B.zeros()) {
            if (std::abs(a.value()) > 0.0) {
                throw InvalidArgument("monomial basis requires all zeros at the origin");
            }
        }
        return BasisDescriptor::monomial(B.degree());
    }
    if (tag == "example3") {
        if (B.degree() != 3 || std::abs(B.zero(0)) > 0.0 || std::abs(B.zero(1)) > 0.0) {
            throw InvalidArgument("example3 basis expects zeros [0, 0, w]");
        }
        return BasisDescriptor::example3(UnitDiskPoint(B.zero(2)));
    }
    throw InvalidArgument("basis must be \"kernel\", \"monomial\" or \"example3\"");
}

Json operator_to_json(const OperatorMatrix& M) {
    Json rows = Json::array();
    for (int i = 0; i < M.entries.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < M.entries.cols(); ++j) {
            row.push_back(complex_to_json(M.entries(i, j)));
        }
        rows.push_back(std::move(row));
    }
    Json out;
    out["basis"] = basis_to_json(M.basis);
    out["entries"] = std::move(rows);
    return out;
}

OperatorMatrix operator_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("entries")) {
        throw InvalidArgument("operator object needs \"basis\" and \"entries\"");
    }
    BasisDescriptor basis = basis_from_json(j["basis"]);
    const Json& rows = j["entries"];
    if (!rows.is_array() || rows.empty()) {
        throw InvalidArgument("\"entries\" must be a nonempty array of rows");
    }
    const int n = static_cast<int>(rows.size());
    Eigen::MatrixXcd entries(n, n);
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) {
            throw InvalidArgument("\"entries\" must be square");
        }
        for (int k = 0; k < n; ++k) entries(i, k) = complex_from_json(rows[i][k]);
    }
    if (n != basis.blaschke.degree()) {
        throw DimensionMismatch("entries dimension " + std::to_string(n) +
                                " does not match the basis dimension " +
                                std::to_string(basis.blaschke.degree()));
    }
    return OperatorMatrix{std::move(entries), std::move(basis)};
}

Json symbol_to_json(const SymbolSpec& symbol) {
    Json out;
    if (symbol.form == SymbolSpec::Form::KernelCoeffs) {
        Json psi = Json::array();
        for (int i = 0; i < symbol.psi.size(); ++i) psi.push_back(complex_to_json(symbol.psi[i]));
        Json chi = Json::array();
        for (int i = 0; i < symbol.chi.size(); ++i) chi.push_back(complex_to_json(symbol.chi[i]));
        out["psi"] = std::move(psi);
        out["chi"] = std::move(chi);
    } else {
        Json trig = Json::object();
        for (const auto& [k, c] : symbol.trig) trig[std::to_string(k)] = complex_to_json(c);
        out["trig"] = std::move(trig);
    }
    return out;
}

SymbolSpec symbol_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("symbol must be a JSON object");
    if (j.contains("trig")) {
        std::map<int, Complex> trig;
        for (const auto& [key, value] : j["trig"].items()) {
            int k = 0;
            try {
                size_t used = 0;
                k = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw InvalidArgument("trig keys must be integers, got \"" + key + "\"");
            }
            trig[k] = complex_from_json(value);
        }
        return SymbolSpec::trig_poly(std::move(trig));
    }
    if (!j.contains("psi") && !j.contains("chi")) {
        throw InvalidArgument("symbol needs \"psi\"/\"chi\" or \"trig\"");
    }
    auto vec = [](const Json& arr) {
        Eigen::VectorXcd v(arr.size());
        for (size_t i = 0; i < arr.size(); ++i) v[static_cast<int>(i)] = complex_from_json(arr[i]);
        return v;
    };
    Eigen::VectorXcd psi, chi;
    if (j.contains("psi")) psi = vec(j["psi"]);
    if (j.contains("chi")) chi = vec(j["chi"]);
    return SymbolSpec::kernel_coeffs(std::move(psi), std::move(chi));
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

}  // namespace ttolab
