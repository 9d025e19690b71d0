// Command line front end: inspect a single algebra, check it against the
// claims, or sweep whole families. Exit codes: 0 clean, 1 operational
// error, 2 at least one claim violated.

#include "quivhom/quivhom.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty() || path == "-")
            return;
        file.open(path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open output file " + path);
        stream = &file;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological invariants of bound quiver algebras over GF(p)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint32_t prime = 101;
    int cap = 64;
    std::uint64_t seed = 0;
    std::string format = "jsonl";
    std::string out_path;
    int jobs = 0;
    bool timings = false;
    app.add_option("--prime", prime, "ground field prime")->capture_default_str();
    app.add_option("--cap", cap, "resolution cap")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized isomorphism tests")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--jobs", jobs, "worker threads for scans (0 = all cores)")
        ->capture_default_str();
    app.add_flag("--timings", timings, "include wall-clock timings in the output");

    std::string info_file, check_file;
    CLI::App* info = app.add_subcommand("info", "print basic invariants of an algebra file");
    info->add_option("file", info_file, "algebra document (JSON)")->required();
    CLI::App* check = app.add_subcommand("check", "evaluate all claims for an algebra file");
    check->add_option("file", check_file, "algebra document (JSON)")->required();

    CLI::App* scan = app.add_subcommand("scan", "sweep a family of algebras");
    scan->require_subcommand(1);
    scan->fallthrough();
    std::string shape = "linear";
    int max_vertices = 3;
    int max_len = 6;
    CLI::App* nak = scan->add_subcommand("nakayama", "Nakayama algebras from Kupisch series");
    nak->add_option("--shape", shape, "series shape")
        ->check(CLI::IsMember({"linear", "cyclic"}))
        ->capture_default_str();
    nak->add_option("--max-vertices", max_vertices, "largest number of vertices")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    nak->add_option("--max-len", max_len, "largest projective length c_i")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    int rs_max_vertices = 3;
    CLI::App* rsq = scan->add_subcommand("radsq", "radical square zero algebras of connected digraphs");
    rsq->add_option("--max-vertices", rs_max_vertices, "largest number of vertices")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        quivhom::PrimeField field(prime);
        OutputTarget target;
        target.open(out_path);
        quivhom::EmitFormat fmt =
            format == "csv" ? quivhom::EmitFormat::Csv : quivhom::EmitFormat::Jsonl;

        if (info->parsed()) {
            quivhom::Algebra a = quivhom::parse_algebra_spec(read_file(info_file), field);
            quivhom::ordered_json j;
            j["algebra_id"] = a.id();
            j["prime"] = a.field().prime();
            j["vertices"] = a.vertex_count();
            j["arrows"] = quivhom::ordered_json::array();
            for (const quivhom::Arrow& ar : a.quiver().arrows())
                j["arrows"].push_back(
                    {{"name", ar.name}, {"source", ar.source}, {"target", ar.target}});
            j["relations"] = quivhom::ordered_json::array();
            for (const quivhom::PathWord& r : a.relations()) {
                std::vector<std::string> names;
                for (int id : r.arrows)
                    names.push_back(a.quiver().arrow(id).name);
                j["relations"].push_back(names);
            }
            j["total_dim"] = a.dimension();
            j["loewy_length"] = a.loewy_length();
            std::vector<int> layer_dims;
            for (const auto& layer : a.radical_layers())
                layer_dims.push_back((int)layer.size());
            j["radical_layer_dims"] = layer_dims;
            j["projective_dims"] = quivhom::ordered_json::array();
            for (int v = 1; v <= a.vertex_count(); ++v)
                j["projective_dims"].push_back(quivhom::projective(a, v).dims());
            j["local"] = quivhom::is_local(a);
            j["nakayama"] = quivhom::is_nakayama(a);
            *target.stream << j.dump() << "\n";
            return 0;
        }

        auto emit_and_close = [&](const std::vector<quivhom::Report>& reports) {
            int rc = quivhom::emit(reports, fmt, *target.stream, timings);
            if (!target.stream->good())
                throw std::runtime_error("write failure on output stream");
            return rc;
        };

        if (check->parsed()) {
            quivhom::Algebra a = quivhom::parse_algebra_spec(read_file(check_file), field);
            std::vector<quivhom::Report> reports{
                quivhom::check_algebra(a, cap, seed, check_file)};
            return emit_and_close(reports);
        }

        quivhom::ScanOptions opt;
        opt.cap = cap;
        opt.seed = seed;
        opt.jobs = jobs;
        std::vector<quivhom::Report> reports;
        if (nak->parsed()) {
            quivhom::KupischShape ks =
                shape == "cyclic" ? quivhom::KupischShape::Cyclic : quivhom::KupischShape::Linear;
            reports = quivhom::scan_nakayama(field, ks, max_vertices, max_len, opt);
        } else {
            reports = quivhom::scan_radical_square_zero(field, rs_max_vertices, opt);
        }
        return emit_and_close(reports);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
