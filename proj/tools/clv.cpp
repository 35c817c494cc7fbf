/*
 * clv: command-line front end for the graded diagram calculus.
 *
 *   clv enumerate --degree K [--connected]      canonical diagram catalog (.dg)
 *   clv structure --degree K --ring z|z2inv     abelian group of the degree-K space
 *   clv reduce FILE.clv [--basis]               normal form of a clover (DiagramVector)
 *   clv compile FILE.clv [-o FILE.pd]           surgery link of a clover (.pd)
 *   clv lk FILE.pd                              linking matrix, determinant, verdict
 *
 * Exit codes: 0 success, 1 invalid input (violations on stderr), 2 resource
 * limit or internal failure.  All arithmetic is exact; output is
 * deterministic byte for byte.
 */

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clv/clv_format.hpp"
#include "clv/dg_format.hpp"
#include "clv/enumerate.hpp"
#include "clv/errors.hpp"
#include "clv/lattice.hpp"
#include "clv/surgery.hpp"

namespace {

struct Options {
    int degree = 0;
    std::string ring = "z";
    bool connected = false;
    bool basis = false;
    int max_degree = clv::default_degree_bound;
    long max_matrix = 1 << 20; // entry-count bound for exact elimination
    std::string input;
    std::string output;
    std::string matrix_dump;
};

void check_matrix_budget(long rows, long cols, long bound) {
    if (rows * cols > bound)
        throw clv::resource_limit("matrix of " + std::to_string(rows) + " x " +
                                  std::to_string(cols) + " entries exceeds --max-matrix " +
                                  std::to_string(bound));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw clv::invalid_input("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw clv::invalid_input("cannot write '" + path + "'");
    out << text;
}

clv::CloverExpression load_clover(const std::string& path) {
    clv::CloverExpression c = clv::parse_clv(slurp(path));
    auto violations = clv::validate_clover(c);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << path << ": " << v << "\n";
        throw clv::invalid_input("invalid clover");
    }
    return c;
}

int run_enumerate(const Options& opt) {
    auto classes = clv::enumerate_diagrams(opt.degree, opt.connected, opt.max_degree);
    std::ostringstream os;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        os << "# class " << i << " hash " << clv::key_hash_hex(classes[i].key)
           << (classes[i].torsion_flag ? " torsion" : "") << "\n";
        os << clv::print_dg(classes[i].graph);
    }
    emit(opt.output, os.str());
    return 0;
}

int run_structure(const Options& opt) {
    clv::Ring ring;
    if (opt.ring == "z")
        ring = clv::Ring::Z;
    else if (opt.ring == "z2inv")
        ring = clv::Ring::ZHalf;
    else
        throw clv::invalid_input("--ring must be 'z' or 'z2inv'");
    auto rm = clv::build_relation_matrix(opt.degree, opt.max_degree);
    check_matrix_budget(rm.rows.rows(), rm.rows.cols(), opt.max_matrix);
    auto structure = clv::group_structure(opt.degree, ring, opt.max_degree);
    if (!opt.matrix_dump.empty()) emit(opt.matrix_dump, clv::print_mtx(rm.rows));
    emit(opt.output, structure.str() + "\n");
    return 0;
}

int run_reduce(const Options& opt) {
    clv::CloverExpression c = load_clover(opt.input);
    clv::DiagramVector v = clv::reduce(c);
    std::ostringstream os;
    os << clv::print_diagram_vector(v);
    if (opt.basis) {
        int k = clv::degree(c) / 2;
        os << "basis :";
        if (clv::degree(c) % 2 == 0)
            for (const clv::Dyadic& x : clv::reduce_to_basis(v, k, opt.max_degree))
                os << " " << x.str();
        os << "\n";
    }
    emit(opt.output, os.str());
    return 0;
}

int run_compile(const Options& opt) {
    clv::CloverExpression c = load_clover(opt.input);
    emit(opt.output, clv::print_pd(clv::compile_surgery_link(c)));
    return 0;
}

int run_lk(const Options& opt) {
    clv::FramedLinkDiagram d = [&] {
        std::istringstream in(slurp(opt.input));
        return clv::parse_pd(in);
    }();
    auto violations = clv::validate_pd(d);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << opt.input << ": " << v << "\n";
        throw clv::invalid_input("invalid planar diagram");
    }
    check_matrix_budget(d.component_count(), d.component_count(), opt.max_matrix);
    auto lm = clv::linking_matrix(d);
    auto cert = clv::unimodularity_certificate(d);
    std::ostringstream os;
    os << "matrix " << lm.entries.rows() << " " << lm.entries.cols() << "\n";
    for (int r = 0; r < lm.entries.rows(); ++r) {
        for (int c = 0; c < lm.entries.cols(); ++c)
            os << (c ? " " : "") << lm.entries.at(r, c);
        os << "\n";
    }
    os << "det " << cert.determinant << "\n";
    os << (cert.unimodular ? "unimodular" : "not unimodular") << "\n";
    emit(opt.output, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded diagram spaces, clover reduction, and surgery-link compilation"};
    app.require_subcommand(1);
    Options opt;

    auto* enumerate = app.add_subcommand("enumerate", "list canonical diagrams of one degree");
    enumerate->add_option("--degree", opt.degree, "degree k (2k vertices)")->required();
    enumerate->add_flag("--connected", opt.connected, "connected classes only");
    enumerate->add_option("--max-degree", opt.max_degree, "enumeration bound");
    enumerate->add_option("-o,--output", opt.output, "output file (default stdout)");

    auto* structure = app.add_subcommand("structure", "abelian group structure of a graded piece");
    structure->add_option("--degree", opt.degree, "degree k")->required();
    structure->add_option("--ring", opt.ring, "z or z2inv")->default_val("z");
    structure->add_option("--matrix", opt.matrix_dump, "dump the relation matrix to a file");
    structure->add_option("--max-degree", opt.max_degree, "enumeration bound");
    structure->add_option("--max-matrix", opt.max_matrix, "entry-count bound for exact elimination");
    structure->add_option("-o,--output", opt.output, "output file (default stdout)");

    auto* reduce = app.add_subcommand("reduce", "reduce a clover to its graded normal form");
    reduce->add_option("file", opt.input, "input .clv file")->required();
    reduce->add_flag("--basis", opt.basis, "also print coordinates in the free basis");
    reduce->add_option("--max-degree", opt.max_degree, "enumeration bound for --basis");
    reduce->add_option("-o,--output", opt.output, "output file (default stdout)");

    auto* compile = app.add_subcommand("compile", "compile a clover into its surgery link");
    compile->add_option("file", opt.input, "input .clv file")->required();
    compile->add_option("-o,--output", opt.output, "output .pd file (default stdout)");

    auto* lk = app.add_subcommand("lk", "linking matrix and unimodularity certificate");
    lk->add_option("file", opt.input, "input .pd file")->required();
    lk->add_option("--max-matrix", opt.max_matrix, "entry-count bound for exact elimination");
    lk->add_option("-o,--output", opt.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(opt);
        if (structure->parsed()) return run_structure(opt);
        if (reduce->parsed()) return run_reduce(opt);
        if (compile->parsed()) return run_compile(opt);
        if (lk->parsed()) return run_lk(opt);
    } catch (const clv::resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const clv::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
