#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sba/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;     // malformed input
constexpr int kExitWitness = 2;   // mathematically meaningful failure
constexpr int kExitPrecision = 3; // precision exhausted

std::string resolve(const std::string& out_dir, const std::string& path) {
    if (out_dir.empty() || std::filesystem::path(path).is_absolute())
        return path;
    return (std::filesystem::path(out_dir) / path).string();
}

std::string file_digest(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw sba::Error("cannot open: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return sba::io::digest(os.str());
}

sba::FieldDescriptor parse_field(const std::string& spec) {
    if (spec == "rational") return sba::FieldDescriptor::rationals();
    if (spec.rfind("prime:", 0) == 0)
        return sba::FieldDescriptor::prime(
            std::stoull(spec.substr(std::string("prime:").size())));
    throw sba::Error("field must be \"rational\" or \"prime:<p>\": " + spec);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificates for strongly badly approximable matrices "
                 "over Laurent series fields"};
    app.require_subcommand(1);
    std::string out_dir;
    app.add_option("--out-dir", out_dir, "directory for output files");

    // gen
    auto* gen = app.add_subcommand("gen", "construct a matrix with nonsingular "
                                          "square block Hankel windows");
    int gen_rows = 1, gen_cols = 1, gen_order = 1;
    std::string gen_out;
    gen->add_option("--rows", gen_rows)->required();
    gen->add_option("--cols", gen_cols)->required();
    gen->add_option("--max-order", gen_order)->required();
    gen->add_option("--out", gen_out)->required();

    // star-check
    auto* star = app.add_subcommand("star-check", "verify all square windows "
                                                  "up to an order bound");
    std::string star_in;
    int star_order = 1;
    std::string star_out;
    star->add_option("--in", star_in)->required();
    star->add_option("--max-order", star_order)->required();
    star->add_option("--out", star_out, "report file (stdout when omitted)");

    // defect-scan
    auto* defect = app.add_subcommand("defect-scan", "scan solution-space "
                                                     "defects over a window");
    std::string defect_in, defect_out;
    int defect_u = 0, defect_v = 0;
    defect->add_option("--in", defect_in)->required();
    defect->add_option("--max-sum-u", defect_u)->required();
    defect->add_option("--max-sum-v", defect_v)->required();
    defect->add_option("--out", defect_out, "report file (stdout when omitted)");

    // rank
    auto* rank = app.add_subcommand("rank", "rank of one assembled block");
    std::string rank_in, rank_shape;
    rank->add_option("--in", rank_in)->required();
    rank->add_option("--shape", rank_shape, "\"U1,..,UN;V1,..,VM\"")->required();

    // kernel
    auto* kernel = app.add_subcommand("kernel", "basis of the solution space");
    std::string kernel_in, kernel_shape;
    kernel->add_option("--in", kernel_in)->required();
    kernel->add_option("--shape", kernel_shape)->required();

    // min-product
    auto* minp = app.add_subcommand("min-product", "exhaustive product minimum "
                                                   "over a finite field");
    std::string minp_in, minp_out;
    int minp_degree = 1;
    minp->add_option("--in", minp_in)->required();
    minp->add_option("--degree-bound", minp_degree)->required();
    minp->add_option("--out", minp_out, "report file (stdout when omitted)");

    // transpose
    auto* transpose = app.add_subcommand("transpose", "write the transpose");
    std::string tr_in, tr_out;
    transpose->add_option("--in", tr_in)->required();
    transpose->add_option("--out", tr_out)->required();

    // series
    auto* series = app.add_subcommand("series", "build a matrix from the "
                                                "exponential or binomial family");
    std::string se_family, se_param, se_out;
    int se_precision = 1, se_rows = 0, se_cols = 0;
    series->add_option("--family", se_family, "exp or binomial")->required();
    series->add_option("--param", se_param, "comma-separated exact scalars")
        ->required();
    series->add_option("--precision", se_precision)->required();
    series->add_option("--rows", se_rows, "1 for a row layout");
    series->add_option("--cols", se_cols, "1 for a column layout");
    series->add_option("--out", se_out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            auto result = sba::generate(sba::FieldDescriptor::rationals(),
                                        gen_rows, gen_cols, gen_order);
            std::string path = resolve(out_dir, gen_out);
            sba::io::write_matrix_file(path, result.matrix);
            result.certificate.matrix_id = file_digest(path);
            auto report = sba::io::report_file(
                "generate", sba::io::generate_result_to_json(result),
                result.certificate.matrix_id);
            sba::io::write_json_file(path + ".report.json", report);
            std::cout << "wrote " << path << " and " << path << ".report.json\n";
            return kExitOk;
        }

        if (star->parsed()) {
            auto A = sba::io::read_matrix_file(star_in);
            auto res = sba::star_check(A, star_order);
            if (!res.ok()) {
                auto report = sba::io::report_file(
                    "star", sba::io::failure_witness_to_json(*res.failure),
                    file_digest(star_in));
                std::cout << report.dump(2) << "\n";
                return kExitWitness;
            }
            res.certificate->matrix_id = file_digest(star_in);
            auto report = sba::io::report_file(
                "star", sba::io::star_certificate_to_json(*res.certificate),
                res.certificate->matrix_id);
            if (star_out.empty())
                std::cout << report.dump(2) << "\n";
            else
                sba::io::write_json_file(resolve(out_dir, star_out), report);
            return kExitOk;
        }

        if (defect->parsed()) {
            auto A = sba::io::read_matrix_file(defect_in);
            auto rep = sba::defect_scan(A, defect_u, defect_v);
            auto report = sba::io::report_file(
                "defect", sba::io::defect_report_to_json(rep),
                file_digest(defect_in));
            if (defect_out.empty())
                std::cout << report.dump(2) << "\n";
            else
                sba::io::write_json_file(resolve(out_dir, defect_out), report);
            return kExitOk;
        }

        if (rank->parsed()) {
            auto A = sba::io::read_matrix_file(rank_in);
            auto shape = sba::ShapeProfile::parse(rank_shape);
            auto block = sba::assemble_block(A, shape);
            std::cout << block.matrix.rows() << "x" << block.matrix.cols()
                      << " rank " << sba::exact_rank(block.matrix) << "\n";
            return kExitOk;
        }

        if (kernel->parsed()) {
            auto A = sba::io::read_matrix_file(kernel_in);
            auto shape = sba::ShapeProfile::parse(kernel_shape);
            auto basis = sba::kernel_basis(A, shape);
            std::cout << "dim " << basis.size() << "\n";
            for (const auto& xi : basis) std::cout << xi.to_string() << "\n";
            return kExitOk;
        }

        if (minp->parsed()) {
            auto A = sba::io::read_matrix_file(minp_in);
            auto rep = sba::min_product_scan(A, minp_degree);
            auto report = sba::io::report_file(
                "minproduct", sba::io::min_product_report_to_json(rep),
                file_digest(minp_in));
            if (minp_out.empty())
                std::cout << report.dump(2) << "\n";
            else
                sba::io::write_json_file(resolve(out_dir, minp_out), report);
            // zero forms disprove the inequality at this precision
            return rep.zero_forms.empty() ? kExitOk : kExitWitness;
        }

        if (transpose->parsed()) {
            auto A = sba::io::read_matrix_file(tr_in);
            sba::io::write_matrix_file(resolve(out_dir, tr_out), A.transposed());
            return kExitOk;
        }

        if (series->parsed()) {
            std::vector<sba::Scalar> params;
            std::istringstream is(se_param);
            std::string item;
            while (std::getline(is, item, ','))
                params.push_back(
                    sba::Scalar::parse(sba::FieldDescriptor::rationals(), item));
            if (params.empty()) throw sba::Error("no parameters given");
            sba::SeriesSpec::Family family;
            if (se_family == "exp")
                family = sba::SeriesSpec::Family::exponential;
            else if (se_family == "binomial")
                family = sba::SeriesSpec::Family::binomial;
            else
                throw sba::Error("family must be exp or binomial: " + se_family);

            int n = static_cast<int>(params.size());
            bool row_layout = se_cols == 1 ? false : true;
            if (se_rows == 1) row_layout = true;
            if ((row_layout && se_cols != 0 && se_cols != n) ||
                (!row_layout && se_rows != 0 && se_rows != n))
                throw sba::Error("layout does not match the parameter count");

            sba::TorusMatrix A(sba::FieldDescriptor::rationals(),
                               row_layout ? 1 : n, row_layout ? n : 1,
                               se_precision);
            for (int i = 0; i < n; ++i) {
                sba::SeriesSpec spec{family, params[static_cast<size_t>(i)],
                                     se_precision};
                if (row_layout)
                    A.set(0, i, spec.build());
                else
                    A.set(i, 0, spec.build());
            }
            sba::io::write_matrix_file(resolve(out_dir, se_out), A);
            return kExitOk;
        }
    } catch (const sba::PrecisionExhausted& e) {
        std::cerr << e.what() << "\n";
        return kExitPrecision;
    } catch (const sba::ZeroLinearForm& e) {
        std::cerr << e.what() << "\n";
        return kExitWitness;
    } catch (const sba::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
