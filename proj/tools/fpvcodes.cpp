// fpvcodes: command-line front end over the libfpvcodes C API.
#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "fpv/fpv.h"

namespace {

constexpr int exit_error = 1;
constexpr int exit_route_disagreement = 3;

struct Failure {
    std::string message;
    int status = exit_error;
};

struct MatrixDeleter {
    void operator()(fpv_matrix* m) const { fpv_matrix_free(m); }
};
struct CodeDeleter {
    void operator()(fpv_code* c) const { fpv_code_free(c); }
};
using Matrix = std::unique_ptr<fpv_matrix, MatrixDeleter>;
using Code = std::unique_ptr<fpv_code, CodeDeleter>;

void check(fpv_status status) {
    if (status != FPV_OK) {
        std::string msg = fpv_status_string(status);
        const std::string detail = fpv_last_error();
        if (!detail.empty()) msg += ": " + detail;
        throw Failure{msg};
    }
}

bool machine = false;

// Report line: "key value" in machine mode, "# key value" in text mode.
void report(const std::string& key, const std::string& value) {
    std::cout << (machine ? "" : "# ") << key << ' ' << value << '\n';
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Failure{"cannot open " + path};
        buf << in.rdbuf();
    }
    return buf.str();
}

Matrix load_matrix(const std::string& path) {
    const std::string text = read_input(path);
    fpv_matrix* m = nullptr;
    try {
        check(fpv_matrix_parse(text.c_str(), &m));
    } catch (Failure& f) {
        f.message = path + ": " + f.message;
        throw;
    }
    return Matrix(m);
}

Code load_code(const std::string& path) {
    auto m = load_matrix(path);
    fpv_code* c = nullptr;
    check(fpv_code_from_matrix(m.get(), &c));
    return Code(c);
}

std::string render(const fpv_matrix* m) {
    char* s = nullptr;
    check(fpv_matrix_render(m, &s));
    std::string out(s);
    fpv_string_free(s);
    return out;
}

Matrix generator_of(const fpv_code* c) {
    fpv_matrix* m = nullptr;
    check(fpv_code_generator(c, &m));
    return Matrix(m);
}

std::string render_code(const fpv_code* c) { return render(generator_of(c).get()); }

fpv_code_info info_of(const fpv_code* c) {
    fpv_code_info info{};
    check(fpv_code_info_get(c, &info));
    return info;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::size_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

std::string size_string(std::uint32_t p, std::size_t k) {
    std::string out = std::to_string(p) + "^" + std::to_string(k);
    unsigned __int128 value = 1;
    for (std::size_t i = 0; i < k; ++i) {
        value *= p;
        if (value > UINT64_MAX) return out;
    }
    return out + " = " + std::to_string(static_cast<std::uint64_t>(value));
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure{"cannot write " + path};
    out << text;
}

int cmd_check(const std::string& path) {
    auto code = load_code(path);
    const auto info = info_of(code.get());
    const bool r = info.ring == FPV_RING_FPV;
    if (machine) {
        report("ring", r ? "fpv" : "fp");
        report("p", std::to_string(info.p));
        report("n", std::to_string(info.n));
        if (r) {
            report("dim_c1", std::to_string(info.dim_c1));
            report("dim_c2", std::to_string(info.dim_c2));
        }
        report("log_p_size", std::to_string(info.log_p_size));
        if (r) report("type", std::to_string(info.k1) + " " + std::to_string(info.k2) + " " + std::to_string(info.k3));
        report("self_orthogonal", std::to_string(info.self_orthogonal));
        if (r) {
            report("self_dual_components", std::to_string(info.self_dual));
            report("self_dual_type_condition", std::to_string(info.self_dual_type_condition));
        }
        report("self_dual", std::to_string(info.self_dual));
    } else {
        std::cout << "ring: " << (r ? "F_" + std::to_string(info.p) + " + vF_" + std::to_string(info.p)
                                    : "F_" + std::to_string(info.p))
                  << '\n';
        std::cout << "n: " << info.n << '\n';
        if (r) {
            std::cout << "dim C1: " << info.dim_c1 << '\n';
            std::cout << "dim C2: " << info.dim_c2 << '\n';
        }
        std::cout << "|C| = " << size_string(info.p, info.log_p_size) << '\n';
        if (r) std::cout << "type (" << info.k1 << "," << info.k2 << "," << info.k3 << ")\n";
        std::cout << "self-orthogonal: " << yes_no(info.self_orthogonal) << '\n';
        if (r) {
            std::cout << "self-dual (components C1, C2): " << yes_no(info.self_dual) << '\n';
            std::cout << "self-dual (type condition): " << yes_no(info.self_dual_type_condition) << '\n';
        }
        std::cout << "self-dual: " << yes_no(info.self_dual) << '\n';
    }
    if (r && info.self_dual != info.self_dual_type_condition) {
        std::cerr << "error: self-duality routes disagree\n";
        return exit_route_disagreement;
    }
    return 0;
}

int cmd_dual(const std::string& path) {
    auto code = load_code(path);
    fpv_code* d = nullptr;
    check(fpv_code_dual(code.get(), &d));
    Code dual(d);
    int same = 0;
    check(fpv_code_equal(code.get(), dual.get(), &same));
    report("equals_input", std::to_string(same));
    if (info_of(code.get()).ring == FPV_RING_FPV) {
        fpv_code* h = nullptr;
        check(fpv_code_dual_via_parity_check(code.get(), &h));
        Code via_h(h);
        int equal = 0;
        check(fpv_code_equal(dual.get(), via_h.get(), &equal));
        report("parity_check_route_agrees", std::to_string(equal));
        if (!equal) {
            std::cerr << "error: dual routes disagree\n";
            return exit_route_disagreement;
        }
    }
    std::cout << render_code(dual.get());
    return 0;
}

int cmd_decompose(const std::string& path, const std::string& c1_path, const std::string& c2_path) {
    auto code = load_code(path);
    fpv_code* a = nullptr;
    fpv_code* b = nullptr;
    check(fpv_code_components(code.get(), &a, &b));
    Code c1(a), c2(b);
    const std::string t1 = render_code(c1.get()), t2 = render_code(c2.get());
    if (!c1_path.empty()) write_file(c1_path, t1);
    if (!c2_path.empty()) write_file(c2_path, t2);
    if (c1_path.empty()) {
        report("component", "C1");
        std::cout << t1;
    }
    if (c2_path.empty()) {
        report("component", "C2");
        std::cout << t2;
    }
    return 0;
}

int cmd_standard_form(const std::string& path, bool parity, const std::vector<std::size_t>& scan) {
    auto code = load_code(path);
    const auto n = info_of(code.get()).n;
    if (!scan.empty() && scan.size() != n) throw Failure{"--scan needs " + std::to_string(n) + " columns"};
    const std::size_t* order = scan.empty() ? nullptr : scan.data();
    std::vector<std::size_t> perm(n);
    std::size_t type[3] = {0, 0, 0};
    fpv_matrix* f = nullptr;
    check(fpv_code_standard_form(code.get(), order, &f, perm.data(), type));
    Matrix form(f);
    report("permutation", join(perm));
    report("type", join({type[0], type[1], type[2]}));
    if (parity) {
        fpv_matrix* h = nullptr;
        check(fpv_code_parity_check(code.get(), order, &h, nullptr));
        std::cout << render(Matrix(h).get());
    } else {
        std::cout << render(form.get());
    }
    return 0;
}

int cmd_gray(const std::string& path) {
    auto code = load_code(path);
    fpv_code* g = nullptr;
    check(fpv_code_gray_image(code.get(), &g));
    std::cout << render_code(Code(g).get());
    return 0;
}

const char* case_name(fpv_construct_case c) {
    switch (c) {
        case FPV_CASE_L1_GT_L2: return "l1>l2";
        case FPV_CASE_L1_LT_L2: return "l1<l2";
        case FPV_CASE_L1_EQ_L2: return "l1=l2";
    }
    return "?";
}

int cmd_construct(const std::string& g1_path, const std::string& g2_path, bool self_dual) {
    auto g1 = load_matrix(g1_path);
    auto g2 = load_matrix(g2_path);
    fpv_matrix* g = nullptr;
    fpv_code* c = nullptr;
    if (self_dual) {
        check(fpv_build_self_dual(g1.get(), g2.get(), &g, &c));
    } else {
        fpv_construct_case which{};
        check(fpv_construct_from_pair(g1.get(), g2.get(), &g, &c, &which));
        report("case", case_name(which));
    }
    Matrix gen(g);
    Code code(c);
    const auto info = info_of(code.get());
    report("log_p_size", std::to_string(info.log_p_size));
    if (self_dual) report("self_dual", std::to_string(info.self_dual));
    std::cout << render(gen.get());
    return 0;
}

int cmd_seed(std::uint32_t p, std::size_t n, const std::string& over) {
    fpv_code* c = nullptr;
    check(fpv_seed_self_dual(p, n, &c));
    Code seed(c);
    if (over == "fpv") {
        // C1 = C2 = the F_p seed.
        auto g = generator_of(seed.get());
        fpv_code* r = nullptr;
        check(fpv_build_self_dual(g.get(), g.get(), nullptr, &r));
        seed.reset(r);
    }
    std::cout << render_code(seed.get());
    return 0;
}

int cmd_exists(std::uint32_t p, std::size_t n) {
    int exists = 0;
    check(fpv_exists_self_dual(p, n, &exists));
    if (machine)
        std::cout << "exists " << exists << '\n';
    else
        std::cout << yes_no(exists) << '\n';
    return 0;
}

int cmd_count(std::uint32_t p, std::size_t n, const std::string& over, std::uint64_t budget) {
    fpv_count_report r{};
    const fpv_ring ring = over == "fp" ? FPV_RING_FP : FPV_RING_FPV;
    check(fpv_count_self_dual(p, n, ring, budget, &r));
    const auto line = [](const std::string& key, std::uint64_t value) {
        std::cout << key << (machine ? " " : ": ") << value << '\n';
    };
    const auto path = [](const std::string& key, int ran, int passed) {
        std::cout << key << (machine ? " " : ": ")
                  << (machine ? (ran ? (passed ? "passed" : "failed") : "skipped")
                              : (ran ? (passed ? "ran, passed" : "ran, FAILED") : "skipped"))
                  << '\n';
    };
    if (ring == FPV_RING_FP) {
        line(machine ? "count" : "N(F_p)", r.fp_count);
        path(machine ? "census" : "census", 1, 1);
        return 0;
    }
    line(machine ? "count" : "N(R)", r.r_count);
    line(machine ? "fp_count" : "N(F_p)", r.fp_count);
    path(machine ? "census" : "census", 1, 1);
    path(machine ? "pair_check" : "pair check", r.pair_check_ran, r.pair_check_passed);
    path(machine ? "exhaustive" : "exhaustive pairs", r.exhaustive_ran, r.exhaustive_passed);
    if (r.exhaustive_ran) line(machine ? "exhaustive_count" : "exhaustive count", r.exhaustive_count);
    if ((r.pair_check_ran && !r.pair_check_passed) || (r.exhaustive_ran && !r.exhaustive_passed)) {
        std::cerr << "error: counting routes disagree\n";
        return exit_route_disagreement;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear and self-dual codes over F_p + vF_p (v^2 = v)"};
    app.require_subcommand(1);
    std::uint64_t budget = 1000000;
    std::string format = "text";
    app.add_option("--budget", budget, "Enumeration cap for counting")->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();

    std::string file, g1, g2, c1_out, c2_out, over = "fpv";
    std::uint32_t p = 0;
    std::size_t n = 0;
    bool parity = false;
    std::vector<std::size_t> scan;
    int rc = 0;

    const auto run = [&](auto fn) {
        return [&rc, fn] { rc = fn(); };
    };

    auto* check_cmd = app.add_subcommand("check", "Report size, type and self-duality of a code");
    check_cmd->add_option("file", file, "Code file ('-' for stdin)")->required();
    check_cmd->callback(run([&] { return cmd_check(file); }));

    auto* dual = app.add_subcommand("dual", "Emit a generator of the dual code");
    dual->add_option("file", file)->required();
    dual->callback(run([&] { return cmd_dual(file); }));

    auto* decompose = app.add_subcommand("decompose", "Emit the component codes C1 and C2");
    decompose->add_option("file", file)->required();
    decompose->add_option("--c1", c1_out, "Write C1 here instead of stdout");
    decompose->add_option("--c2", c2_out, "Write C2 here instead of stdout");
    decompose->callback(run([&] { return cmd_decompose(file, c1_out, c2_out); }));

    auto* sf = app.add_subcommand("standard-form", "Emit the standard-form generator, permutation and type");
    sf->add_option("file", file)->required();
    sf->add_flag("--parity-check", parity, "Emit the parity-check matrix instead");
    sf->add_option("--scan", scan, "Column order for the pivot search (default left to right)")->delimiter(',');
    sf->callback(run([&] { return cmd_standard_form(file, parity, scan); }));

    auto* gray = app.add_subcommand("gray", "Emit the Gray image over F_p");
    gray->add_option("file", file)->required();
    gray->callback(run([&] { return cmd_gray(file); }));

    auto* construct = app.add_subcommand("construct", "Build vG2 + (1-v)G1 from two F_p generators");
    construct->add_option("g1", g1)->required();
    construct->add_option("g2", g2)->required();
    construct->callback(run([&] { return cmd_construct(g1, g2, false); }));

    auto* build = app.add_subcommand("build-selfdual", "Build a self-dual code from two self-dual F_p codes");
    build->add_option("g1", g1)->required();
    build->add_option("g2", g2)->required();
    build->callback(run([&] { return cmd_construct(g1, g2, true); }));

    auto* seed = app.add_subcommand("seed", "Emit an explicit self-dual code over R");
    seed->add_option("p", p)->required();
    seed->add_option("n", n)->required();
    seed->add_option("--over", over)->check(CLI::IsMember({"fp", "fpv"}))->default_str("fp");
    seed->callback(run([&] { return cmd_seed(p, n, seed->count("--over") ? over : std::string("fp")); }));

    auto* exists = app.add_subcommand("exists", "Decide whether a self-dual code of length n exists");
    exists->add_option("p", p)->required();
    exists->add_option("n", n)->required();
    exists->callback(run([&] { return cmd_exists(p, n); }));

    auto* count = app.add_subcommand("count", "Count self-dual codes by enumeration");
    count->add_option("p", p)->required();
    count->add_option("n", n)->required();
    count->add_option("--over", over)->check(CLI::IsMember({"fp", "fpv"}))->capture_default_str();
    count->callback(run([&] { return cmd_count(p, n, over, budget); }));

    app.parse_complete_callback([&] { machine = format == "machine"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Failure& f) {
        std::cout.flush();
        std::cerr << "error: " << f.message << '\n';
        return f.status;
    }
    return rc;
}
