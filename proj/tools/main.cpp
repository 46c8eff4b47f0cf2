#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psr/facet.hpp"
#include "psr/filtration.hpp"
#include "psr/homology.hpp"
#include "psr/io.hpp"
#include "psr/metrics.hpp"
#include "psr/pipeline.hpp"
#include "psr/sr_algebra.hpp"
#include "psr/svg.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& content, const std::string& output) {
    if (output.empty())
        std::cout << content;
    else
        psr::write_file(output, content);
}

std::optional<std::set<std::string>> element_filter(const std::string& csv) {
    if (csv.empty()) return std::nullopt;
    std::set<std::string> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.insert(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (out.empty()) return std::nullopt;
    return out;
}

psr::Scale parse_scale(const std::string& s) {
    if (s == "diameter") return psr::Scale::Diameter;
    if (s == "radius") return psr::Scale::Radius;
    throw CLI::ValidationError("--scale", "must be 'diameter' or 'radius'");
}

std::string table_output(const psr::BettiTable& table, const std::string& format) {
    if (format == "json") return psr::betti_table_to_json(table);
    return psr::betti_table_to_csv(table);
}

std::string vector_json(const std::vector<long long>& v) {
    return json(v).dump();
}

json hf_json(const psr::FVector& f, const psr::HVector& h) {
    return {{"f", f.coefficients}, {"h", h.coefficients}};
}

std::string curve_json(const psr::Filtration& filtration, double t, double t_prime,
                       psr::PrimeField field, int precision) {
    std::vector<double> grid;
    for (double c : filtration.critical_values(precision).values)
        if (c >= t && c <= t_prime) grid.push_back(c);
    if (grid.empty()) throw std::invalid_argument("no critical values inside [t, t']");

    std::vector<std::vector<long long>> f_rows, h_rows;
    std::size_t width = 0;
    for (double c : grid) {
        f_rows.push_back(psr::persistent_f_vector(filtration, t, c, field).coefficients);
        h_rows.push_back(psr::persistent_h_vector(filtration, t, c, field).coefficients);
        width = std::max({width, f_rows.back().size(), h_rows.back().size()});
    }

    json series = json::array();
    auto add = [&](const char* prefix, const std::vector<std::vector<long long>>& rows) {
        for (std::size_t m = 0; m < width; ++m) {
            std::vector<long long> values;
            for (const auto& row : rows) values.push_back(m < row.size() ? row[m] : 0);
            series.push_back({{"name", std::string(prefix) + std::to_string(m)}, {"values", values}});
        }
    };
    add("f_", f_rows);
    add("h_", h_rows);

    json out;
    out["t"] = t;
    out["t_prime"] = t_prime;
    out["grid"] = json::array();
    for (double c : grid) out["grid"].push_back(psr::round_to_precision(c, precision));
    out["series"] = series;
    return out.dump();
}

std::string plot_input(const std::string& text, int precision) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw psr::ParseError("malformed JSON input");
    if (j.contains("intervals")) return psr::barcode_svg(psr::load_barcode_json(text), precision);
    if (j.contains("bars")) return psr::facet_barcode_svg(psr::load_facet_barcode_json(text), precision);
    if (j.contains("points")) return psr::diagram_svg(psr::load_diagram_json(text), precision);
    if (j.contains("grid") && j.contains("series")) {
        std::vector<double> xs = j.at("grid").get<std::vector<double>>();
        std::vector<std::vector<long long>> series;
        std::vector<std::string> names;
        for (const auto& s : j.at("series")) {
            names.push_back(s.at("name").get<std::string>());
            series.push_back(s.at("values").get<std::vector<long long>>());
        }
        return psr::step_curve_svg(xs, series, names, precision);
    }
    throw psr::ParseError("unrecognized plot input: expected barcode, diagram, or step-curve JSON");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley-Reisner persistence toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file mirroring the flags; flags take precedence");

    std::string input, input_b, output, elements, scale_name = "diameter", format = "csv";
    int field = 2, max_dim = 2, max_j = -1, threads = 1, precision = 9;
    int k = 5, repetitions = 10;
    double max_radius = 7.0, min_radius = 0.0, t = 0.0, t_prime = 0.0, test_fraction = 0.2;
    std::uint64_t seed = 0;
    bool keep_empty_bars = false, curve = false;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", output, "Output file (stdout if omitted)");
        cmd->add_option("--precision", precision, "Decimal digits for numeric output")
            ->check(CLI::Range(0, 15));
    };

    auto* rips = app.add_subcommand("rips", "Vietoris-Rips filtration from an XYZ point cloud");
    rips->add_option("input", input, "XYZ file")->required();
    rips->add_option("--max-dim", max_dim, "Maximum simplex dimension");
    rips->add_option("--max-radius", max_radius, "Maximum ball radius");
    rips->add_option("--elements", elements, "Comma-separated element filter, e.g. B,C");
    rips->add_option("--scale", scale_name, "Filtration value scale: diameter or radius");
    add_output(rips);

    auto* betti = app.add_subcommand("betti-table", "Graded Betti table of a complex");
    betti->add_option("input", input, "Complex JSON file")->required();
    betti->add_option("--field", field, "Coefficient field modulus (prime)");
    betti->add_option("--max-j", max_j, "Cap on the internal degree (-1 for none)");
    betti->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    betti->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_output(betti);

    auto* pbetti = app.add_subcommand("persistent-betti", "Persistent graded Betti table");
    pbetti->add_option("input", input, "Filtration JSON file")->required();
    pbetti->add_option("--t", t, "Start parameter")->required();
    pbetti->add_option("--t-prime", t_prime, "End parameter")->required();
    pbetti->add_option("--field", field, "Coefficient field modulus (prime)");
    pbetti->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    pbetti->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_output(pbetti);

    auto* hf = app.add_subcommand("hf-vectors", "f- and h-vectors, static or persistent");
    hf->add_option("input", input, "Complex JSON (static) or filtration JSON (with --t)")->required();
    auto* hf_t = hf->add_option("--t", t, "Start parameter (persistent mode)");
    hf->add_option("--t-prime", t_prime, "End parameter")->needs(hf_t);
    hf->add_option("--field", field, "Coefficient field modulus (prime)");
    hf->add_flag("--curve", curve, "Emit step-curve data over the critical values in [t, t']");
    add_output(hf);

    auto* fbc = app.add_subcommand("facet-barcode", "Facet persistence barcode of a filtration");
    fbc->add_option("input", input, "Filtration JSON file")->required();
    fbc->add_flag("--keep-empty-bars", keep_empty_bars, "Keep zero-length bars");
    add_output(fbc);

    auto* crit = app.add_subcommand("critical-values", "Stanley-Reisner critical values");
    crit->add_option("input", input, "Filtration JSON file")->required();
    add_output(crit);

    auto* dgm = app.add_subcommand("diagram", "Facet persistence diagram of a filtration");
    dgm->add_option("input", input, "Filtration JSON file")->required();
    add_output(dgm);

    auto* bn = app.add_subcommand("bottleneck", "Bottleneck distance between two diagrams");
    bn->add_option("a", input, "Diagram JSON file")->required();
    bn->add_option("b", input_b, "Diagram JSON file")->required();
    add_output(bn);

    auto* hd = app.add_subcommand("hausdorff", "Hausdorff distance between two critical-value sets");
    hd->add_option("a", input, "Critical-values JSON file")->required();
    hd->add_option("b", input_b, "Critical-values JSON file")->required();
    add_output(hd);

    auto* cls = app.add_subcommand("classify", "k-NN classification over a dataset manifest");
    cls->add_option("input", input, "Manifest CSV (id,label,path)")->required();
    cls->add_option("--k", k, "Neighbor count")->check(CLI::PositiveNumber);
    cls->add_option("--test-fraction", test_fraction, "Held-out fraction per repetition");
    cls->add_option("--repetitions", repetitions, "Split repetitions")->check(CLI::PositiveNumber);
    cls->add_option("--seed", seed, "Random seed");
    cls->add_option("--min-radius", min_radius, "Lower radius cutoff for features");
    cls->add_option("--max-radius", max_radius, "Upper radius cutoff for features");
    cls->add_option("--max-dim", max_dim, "Maximum simplex dimension");
    cls->add_option("--elements", elements, "Comma-separated element filter");
    cls->add_option("--scale", scale_name, "Filtration value scale: diameter or radius");
    cls->add_option("--distances", input_b, "Also write the distance matrix CSV here");
    add_output(cls);

    auto* plot = app.add_subcommand("plot", "Render barcode, diagram, or step-curve JSON as SVG");
    plot->add_option("input", input, "JSON file")->required();
    add_output(plot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (rips->parsed()) {
            const auto cloud = psr::parse_xyz(input);
            const auto filtration = psr::Filtration::vietoris_rips(
                cloud, max_dim, max_radius, element_filter(elements), parse_scale(scale_name));
            emit(psr::filtration_to_json(filtration, precision), output);
        } else if (betti->parsed()) {
            const auto complex = psr::load_complex_json(psr::read_file(input));
            const auto table = psr::hochster_table(complex, psr::PrimeField{field}, max_j, threads);
            emit(table_output(table, format), output);
        } else if (pbetti->parsed()) {
            const auto filtration = psr::load_filtration_json(psr::read_file(input));
            const auto result =
                psr::persistent_hochster_table(filtration, t, t_prime, psr::PrimeField{field}, threads);
            emit(table_output(result.table, format), output);
        } else if (hf->parsed()) {
            if (curve && hf_t->count() == 0)
                throw CLI::RequiredError("--curve requires --t and --t-prime");
            if (hf_t->count() > 0) {
                const auto filtration = psr::load_filtration_json(psr::read_file(input));
                if (curve) {
                    emit(curve_json(filtration, t, t_prime, psr::PrimeField{field}, precision), output);
                } else {
                    const auto f = psr::persistent_f_vector(filtration, t, t_prime, psr::PrimeField{field});
                    const auto h = psr::persistent_h_vector(filtration, t, t_prime, psr::PrimeField{field});
                    json j = hf_json(f, h);
                    j["t"] = t;
                    j["t_prime"] = t_prime;
                    emit(j.dump(), output);
                }
            } else {
                const auto complex = psr::load_complex_json(psr::read_file(input));
                const auto table = psr::hochster_table(complex, psr::PrimeField{field});
                const int n = complex.vertex_count();
                const int d = complex.dim() + 1;
                const auto f = psr::f_from_betti(table, n, d);
                const auto h = psr::h_vector_from_betti(table, n, d);
                emit(hf_json(f, h).dump(), output);
            }
        } else if (fbc->parsed()) {
            const auto filtration = psr::load_filtration_json(psr::read_file(input));
            emit(psr::facet_barcode_to_json(psr::facet_barcode(filtration, keep_empty_bars), precision),
                 output);
        } else if (crit->parsed()) {
            const auto filtration = psr::load_filtration_json(psr::read_file(input));
            emit(psr::critical_values_to_json(filtration.critical_values(precision), precision), output);
        } else if (dgm->parsed()) {
            const auto filtration = psr::load_filtration_json(psr::read_file(input));
            emit(psr::diagram_to_json(psr::multiplicities(filtration, precision), precision), output);
        } else if (bn->parsed()) {
            const auto a = psr::load_diagram_json(psr::read_file(input));
            const auto b = psr::load_diagram_json(psr::read_file(input_b));
            const double d = psr::bottleneck(psr::diagram_points(a), psr::diagram_points(b));
            emit(psr::format_number(d, precision) + "\n", output);
        } else if (hd->parsed()) {
            const auto a = psr::load_critical_values_json(psr::read_file(input));
            const auto b = psr::load_critical_values_json(psr::read_file(input_b));
            emit(psr::format_number(psr::hausdorff(a.values, b.values), precision) + "\n", output);
        } else if (cls->parsed()) {
            const auto manifest = psr::parse_manifest_csv(input);
            psr::FeatureConfig config;
            config.min_radius = min_radius;
            config.max_radius = max_radius;
            config.max_dim = max_dim;
            config.elements = element_filter(elements);
            config.scale = parse_scale(scale_name);
            config.precision = precision;
            std::vector<psr::Sample> samples;
            std::vector<std::string> labels;
            for (const auto& entry : manifest) {
                psr::Sample s{entry.id, entry.label,
                              psr::extract_features(psr::parse_xyz(entry.path), config)};
                labels.push_back(entry.label);
                samples.push_back(std::move(s));
            }
            const auto matrix = psr::pairwise_distances(samples);
            if (!input_b.empty())
                psr::write_file(input_b, psr::distance_matrix_to_csv(matrix, precision));
            const auto summary = psr::evaluate(matrix, labels, k, test_fraction, repetitions, seed);
            emit(psr::eval_summary_to_json(summary, precision), output);
        } else if (plot->parsed()) {
            emit(plot_input(psr::read_file(input), precision), output);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
