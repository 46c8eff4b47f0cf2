#include "psr/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace psr {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

std::string format_number(double x, int precision) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

namespace {

double rounded(double x, int precision) { return round_to_precision(x, precision); }

json death_to_json(double death, int precision) {
    if (death == kInfinity) return nullptr;
    return rounded(death, precision);
}

double death_from_json(const json& j) {
    if (j.is_null()) return kInfinity;
    return j.get<double>();
}

std::string normalize_element(std::string sym) {
    if (sym.empty()) return sym;
    sym[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(sym[0])));
    for (std::size_t i = 1; i < sym.size(); ++i)
        sym[i] = static_cast<char>(std::tolower(static_cast<unsigned char>(sym[i])));
    return sym;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON input");
    return j;
}

}  // namespace

PointCloud parse_xyz(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::string line;
    int lineno = 0;

    auto next_line = [&](bool required) {
        if (!std::getline(in, line)) {
            if (required) throw ParseError(path + ": unexpected end of file at line " + std::to_string(lineno + 1));
            return false;
        }
        ++lineno;
        return true;
    };

    next_line(true);
    long long count = 0;
    try {
        std::size_t pos = 0;
        count = std::stoll(line, &pos);
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos != line.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError(path + ":1: malformed atom count line: '" + line + "'");
    }
    if (count < 0) throw ParseError(path + ":1: negative atom count");
    next_line(true);  // comment line

    PointCloud cloud;
    for (long long i = 0; i < count; ++i) {
        if (!next_line(false))
            throw ParseError(path + ": atom count mismatch: expected " + std::to_string(count) +
                             " atoms, found " + std::to_string(i));
        std::istringstream is(line);
        Atom atom;
        if (!(is >> atom.element >> atom.position[0] >> atom.position[1] >> atom.position[2]))
            throw ParseError(path + ":" + std::to_string(lineno) + ": malformed atom record: '" + line + "'");
        atom.element = normalize_element(atom.element);
        cloud.atoms.push_back(std::move(atom));
    }
    return cloud;
}

SimplicialComplex load_complex_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.contains("vertices") || !j.contains("faces"))
        throw ParseError("complex JSON requires 'vertices' and 'faces'");
    SimplicialComplex c(j.at("vertices").get<int>());
    for (const auto& face : j.at("faces")) c.insert_face(Simplex(face.get<std::vector<Vertex>>()));
    return c;
}

std::string complex_to_json(const SimplicialComplex& complex) {
    json j;
    j["vertices"] = complex.vertex_count();
    j["faces"] = json::array();
    for (const Simplex& f : complex.facets()) j["faces"].push_back(f.vertices());
    return j.dump();
}

std::string filtration_to_json(const Filtration& filtration, int precision) {
    json j;
    j["vertices"] = filtration.complex().vertex_count();
    j["faces"] = json::array();
    for (const auto& [s, v] : filtration.ordered())
        j["faces"].push_back({{"vertices", s.vertices()}, {"value", rounded(v, precision)}});
    return j.dump();
}

Filtration load_filtration_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.contains("vertices") || !j.contains("faces"))
        throw ParseError("filtration JSON requires 'vertices' and 'faces'");
    std::vector<std::pair<Simplex, double>> values;
    for (const auto& face : j.at("faces"))
        values.emplace_back(Simplex(face.at("vertices").get<std::vector<Vertex>>()),
                            face.at("value").get<double>());
    return Filtration::from_explicit(j.at("vertices").get<int>(), values);
}

std::string barcode_to_json(const Barcode& barcode, int precision) {
    json j;
    j["intervals"] = json::array();
    for (const Interval& iv : barcode.intervals)
        j["intervals"].push_back({{"dim", iv.dim},
                                  {"birth", rounded(iv.birth, precision)},
                                  {"death", death_to_json(iv.death, precision)}});
    return j.dump();
}

Barcode load_barcode_json(const std::string& text) {
    const json j = parse_json(text);
    Barcode bc;
    for (const auto& iv : j.at("intervals"))
        bc.intervals.push_back(
            {iv.at("dim").get<int>(), iv.at("birth").get<double>(), death_from_json(iv.at("death"))});
    return bc;
}

std::string facet_barcode_to_json(const FacetBarcode& barcode, int precision) {
    json j;
    j["bars"] = json::array();
    for (const FacetBar& bar : barcode.bars)
        j["bars"].push_back({{"face", bar.face.vertices()},
                             {"dim", bar.dim()},
                             {"birth", rounded(bar.birth, precision)},
                             {"death", death_to_json(bar.death, precision)}});
    return j.dump();
}

FacetBarcode load_facet_barcode_json(const std::string& text) {
    const json j = parse_json(text);
    FacetBarcode bc;
    for (const auto& bar : j.at("bars"))
        bc.bars.push_back({Simplex(bar.at("face").get<std::vector<Vertex>>()),
                           bar.at("birth").get<double>(), death_from_json(bar.at("death"))});
    return bc;
}

std::string diagram_to_json(const FacetDiagram& dgm, int precision) {
    json j;
    j["points"] = json::array();
    for (const DiagramPoint& p : dgm.points)
        j["points"].push_back({{"birth", rounded(p.birth, precision)},
                               {"death", death_to_json(p.death, precision)},
                               {"multiplicity", p.multiplicity}});
    return j.dump();
}

FacetDiagram load_diagram_json(const std::string& text) {
    const json j = parse_json(text);
    FacetDiagram dgm;
    for (const auto& p : j.at("points"))
        dgm.points.push_back({p.at("birth").get<double>(), death_from_json(p.at("death")),
                              p.at("multiplicity").get<long long>()});
    return dgm;
}

std::string betti_table_to_json(const BettiTable& table) {
    json j;
    j["n"] = table.n;
    if (table.truncated) j["max_j"] = table.max_j;
    j["entries"] = json::array();
    for (const auto& [ij, v] : table.entries)
        if (v) j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"beta", v}});
    return j.dump();
}

BettiTable load_betti_table_json(const std::string& text) {
    const json j = parse_json(text);
    BettiTable t;
    t.n = j.at("n").get<int>();
    if (j.contains("max_j")) {
        t.truncated = true;
        t.max_j = j.at("max_j").get<int>();
    }
    for (const auto& e : j.at("entries"))
        t.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("beta").get<long long>();
    return t;
}

std::string betti_table_to_csv(const BettiTable& table) {
    int max_i = 0, max_r = 0;
    for (const auto& [ij, v] : table.entries)
        if (v) {
            max_i = std::max(max_i, ij.first);
            max_r = std::max(max_r, ij.second - ij.first);
        }
    std::ostringstream os;
    os << "j-i\\i";
    for (int i = 0; i <= max_i; ++i) os << ',' << i;
    os << '\n';
    for (int r = 0; r <= max_r; ++r) {
        os << r;
        for (int i = 0; i <= max_i; ++i) os << ',' << table.at(i, i + r);
        os << '\n';
    }
    return os.str();
}

std::string critical_values_to_json(const CriticalValues& cv, int precision) {
    json j;
    j["critical_values"] = json::array();
    for (double v : cv.values) j["critical_values"].push_back(rounded(v, precision));
    return j.dump();
}

CriticalValues load_critical_values_json(const std::string& text) {
    const json j = parse_json(text);
    CriticalValues cv;
    for (const auto& v : j.at("critical_values")) cv.values.push_back(v.get<double>());
    return cv;
}

std::string distance_matrix_to_csv(const DistanceMatrix& matrix, int precision) {
    std::ostringstream os;
    os << "id";
    for (const auto& id : matrix.ids) os << ',' << id;
    os << '\n';
    for (std::size_t r = 0; r < matrix.ids.size(); ++r) {
        os << matrix.ids[r];
        for (std::size_t c = 0; c < matrix.ids.size(); ++c)
            os << ',' << format_number(matrix.entries[r][c], precision);
        os << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

DistanceMatrix load_distance_matrix_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw ParseError("distance matrix CSV is empty");
    auto header = split_csv_line(line);
    if (header.empty() || header[0] != "id") throw ParseError("distance matrix CSV must start with 'id' header");
    DistanceMatrix m;
    m.ids.assign(header.begin() + 1, header.end());
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != m.ids.size() + 1)
            throw ParseError("distance matrix CSV line " + std::to_string(lineno) + ": expected " +
                             std::to_string(m.ids.size() + 1) + " fields, found " +
                             std::to_string(fields.size()));
        std::vector<double> row;
        for (std::size_t c = 1; c < fields.size(); ++c) row.push_back(std::stod(fields[c]));
        m.entries.push_back(std::move(row));
    }
    if (m.entries.size() != m.ids.size()) throw ParseError("distance matrix CSV is not square");
    return m;
}

std::vector<ManifestEntry> parse_manifest_csv(const std::string& path) {
    // relative sample paths resolve against the manifest's own directory
    std::string base;
    if (const auto slash = path.find_last_of('/'); slash != std::string::npos)
        base = path.substr(0, slash + 1);
    std::istringstream is(read_file(path));
    std::string line;
    if (!std::getline(is, line)) throw ParseError(path + ": manifest is empty");
    auto header = split_csv_line(line);
    if (header.size() != 3 || header[0] != "id" || header[1] != "label" || header[2] != "path")
        throw ParseError(path + ":1: manifest header must be 'id,label,path'");
    std::vector<ManifestEntry> out;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected 3 fields, found " +
                             std::to_string(fields.size()));
        if (!fields[2].empty() && fields[2][0] != '/') fields[2] = base + fields[2];
        out.push_back({fields[0], fields[1], fields[2]});
    }
    return out;
}

namespace {

json report_to_json(const EvalReport& r, int precision) {
    return {{"accuracy", rounded(r.accuracy, precision)},
            {"balanced_accuracy", rounded(r.balanced_accuracy, precision)},
            {"macro_precision", rounded(r.macro_precision, precision)},
            {"macro_recall", rounded(r.macro_recall, precision)},
            {"macro_f1", rounded(r.macro_f1, precision)},
            {"matthews", rounded(r.matthews, precision)},
            {"matthews_defined", r.matthews_defined}};
}

}  // namespace

std::string eval_summary_to_json(const EvalSummary& summary, int precision) {
    json j;
    j["repetitions"] = json::array();
    for (const auto& r : summary.per_repetition) j["repetitions"].push_back(report_to_json(r, precision));
    j["mean"] = report_to_json(summary.mean, precision);
    j["stddev"] = report_to_json(summary.stddev, precision);
    return j.dump();
}

}  // namespace psr
