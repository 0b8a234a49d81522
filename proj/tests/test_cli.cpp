// End-to-end checks of the wehrl_jcm binary: exit codes, file layout,
// determinism across runs and thread counts. The binary path comes in as
// argv[1] so the test stays build-system agnostic.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "  ok: " : "  FAILED: ") << what << "\n";
    if (!ok) ++g_failures;
}

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run(const std::string& cmd) {
    RunResult result;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) {
        result.output = "popen failed";
        return result;
    }
    char buf[512];
    while (fgets(buf, sizeof(buf), pipe)) result.output += buf;
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: wjcm_cli_tests <path-to-wehrl_jcm>\n";
        return 1;
    }
    const std::string cli = argv[1];
    const fs::path dir = fs::temp_directory_path() / "wjcm_cli_tests";
    fs::remove_all(dir);
    fs::create_directories(dir);

    {
        const RunResult r = run(cli + " --preset fig9");
        check(r.exit_code == 1, "unknown preset exits 1");
        check(r.output.find("fig1, fig2, fig3") != std::string::npos,
              "unknown preset lists the valid names");
    }
    {
        const RunResult r = run(cli + " --alpha -3");
        check(r.exit_code == 1, "invalid alpha exits 1");
    }
    {
        const RunResult r = run(cli + " --quantities nonsense --t-steps 2");
        check(r.exit_code == 1, "bad quantity token exits 1");
    }
    {
        const fs::path out = dir / "f3.csv";
        const RunResult r =
            run(cli + " --preset fig3 --t-steps 5 --output " + out.string());
        check(r.exit_code == 0, "fig3 preset run exits 0");
        check(fs::exists(out), "fig3 output file exists");
        const std::string body = slurp(out);
        check(first_line(body) == "t,Z_theta@0.25pi,Z_phi@0.25pi", "fig3 header layout");
        check(std::count(body.begin(), body.end(), '\n') == 6, "header plus five records");

        const fs::path out2 = dir / "f3b.csv";
        run(cli + " --preset fig3 --t-steps 5 --output " + out2.string());
        check(slurp(out) == slurp(out2), "re-run is byte-identical");
        const fs::path out3 = dir / "f3c.csv";
        run("WEHRL_JCM_THREADS=1 " + cli + " --preset fig3 --t-steps 5 --output " +
            out3.string());
        check(slurp(out) == slurp(out3), "single-thread run is byte-identical");
    }
    {
        const fs::path out = dir / "multi.csv";
        const RunResult r = run(cli + " --preset fig1 --t-steps 3 --output " + out.string());
        check(r.exit_code == 0, "fig1 preset run exits 0");
        check(fs::exists(dir / "multi_vartheta0pi.csv") &&
                  fs::exists(dir / "multi_vartheta0.25pi.csv"),
              "two-variant preset writes suffixed files");
    }
    {
        const fs::path out = dir / "run.json";
        const RunResult r = run(cli + " --alpha 5 --vartheta 0.25 --t-max 2 --t-steps 3 "
                                      "--quantities bloch,gamma --format json --output " +
                                out.string());
        check(r.exit_code == 0, "json run exits 0");
        const nlohmann::json doc = nlohmann::json::parse(slurp(out));
        check(doc["meta"]["tool"] == "wehrl_jcm", "json meta.tool");
        check(doc["records"].size() == 3, "json record count");
        check(doc["records"][0].contains("gamma"), "json gamma column present");
    }
    {
        const fs::path cfg = dir / "run.cfg";
        std::ofstream(cfg) << "alpha=5\nvartheta=0\nt-max=1\nt-steps=3\nquantities=gamma,H\n";
        const fs::path out = dir / "fromcfg.csv";
        const RunResult r =
            run(cli + " --config " + cfg.string() + " --output " + out.string());
        check(r.exit_code == 0, "config-file run exits 0");
        check(first_line(slurp(out)) == "t,gamma,H_b,H_c,H_h", "config-file columns");
    }
    {
        // an unreachable quadrature tolerance is a numerical failure: exit 2,
        // holes in the data, errors reported per record
        const fs::path out = dir / "hard.csv";
        const RunResult r = run(cli + " --preset fig3 --t-steps 2 --quad-tol 1e-30 --output " +
                                out.string());
        check(r.exit_code == 2, "quadrature failure exits 2");
        check(slurp(out).find("nan") != std::string::npos, "failed cells print as nan");
        check(r.output.find("warning") != std::string::npos, "failures are reported");
    }
    {
        const fs::path out = dir / "plot.csv";
        const RunResult r =
            run(cli + " --preset fig3 --t-steps 4 --gnuplot --output " + out.string());
        check(r.exit_code == 0, "gnuplot run exits 0");
        check(fs::exists(dir / "plot.gp"), "gnuplot script emitted");
    }

    fs::remove_all(dir);
    if (g_failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cout << g_failures << " cli check(s) failed\n";
    return 1;
}
