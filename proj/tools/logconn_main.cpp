/*
   Copyright 2026 the logconn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <logconn/logconn.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace logconn;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::vector<int> parse_splitting_arg(const std::string& arg) {
    std::vector<int> degrees;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            degrees.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw parse_error("--splitting: '" + item + "' is not an integer");
        }
    }
    if (degrees.empty()) throw parse_error("--splitting: empty list");
    return degrees;
}

int run_decide_one(const std::string& path, const std::string& format, std::ostream& out) {
    const Instance inst = load_instance(path);
    const ObstructionReport rep = obstruction_values(inst);
    if (format == "json")
        out << obstruction_report_to_json(rep).dump(2) << "\n";
    else if (format == "latex")
        out << obstruction_report_to_latex(rep);
    else
        out << obstruction_report_to_text(rep);
    return rep.exists ? kExitYes : kExitNo;
}

int run_decide_batch(const std::string& dir, std::ostream& out) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    struct Result {
        bool ok;
        bool exists;
        std::string message;
    };
    std::vector<std::future<Result>> futures;
    futures.reserve(files.size());
    for (const auto& f : files) {
        futures.push_back(std::async(std::launch::async, [f]() -> Result {
            try {
                return {true, decide_existence(load_instance(f.string())), ""};
            } catch (const std::exception& e) {
                return {false, false, e.what()};
            }
        }));
    }
    bool any_error = false;
    bool any_missing = false;
    for (std::size_t i = 0; i < files.size(); ++i) {
        const Result r = futures[i].get();
        if (!r.ok) {
            any_error = true;
            out << files[i].filename().string() << ": error: " << r.message << "\n";
        } else {
            if (!r.exists) any_missing = true;
            out << files[i].filename().string() << ": " << (r.exists ? "exists" : "not exists") << "\n";
        }
    }
    if (any_error) return kExitInputError;
    return any_missing ? kExitNo : kExitYes;
}

int run_synthesize(const std::string& path, const std::string& out_path, const std::string& format,
                   std::ostream& out) {
    const Instance inst = load_instance(path);
    const std::optional<ConnectionPresentation> conn = synthesize(inst);
    if (!conn) {
        out << "infeasible: no logarithmic connection with the prescribed residues\n";
        out << obstruction_report_to_text(obstruction_values(inst));
        return kExitNo;
    }
    const VerifyReport rep = verify(*conn, inst.residues);
    if (!rep.pass()) {
        // synthesized certificates must verify; refuse to emit otherwise
        out << "internal error: synthesized certificate failed verification\n"
            << verify_report_to_text(rep);
        return kExitNo;
    }
    if (!out_path.empty()) {
        std::ofstream of(out_path, std::ios::binary);
        if (!of) throw parse_error(out_path + ": cannot open for writing");
        of << certificate_to_json(*conn).dump(2) << "\n";
        out << "certificate written to " << out_path << "\n";
        return kExitYes;
    }
    if (format == "text")
        out << certificate_to_text(*conn);
    else if (format == "latex")
        out << certificate_to_latex(*conn);
    else
        out << certificate_to_json(*conn).dump(2) << "\n";
    return kExitYes;
}

int run_verify(const std::string& cert_path, const std::string& inst_path, const std::string& format,
               std::ostream& out) {
    const ConnectionPresentation conn = parse_certificate(read_file(cert_path));
    const Instance inst = load_instance(inst_path);
    if (conn.splitting != inst.splitting)
        throw parse_error("certificate and instance disagree on the splitting type");
    for (const Scalar& x : inst.points.points())
        if (!conn.points.contains(x))
            throw parse_error("certificate and instance disagree on the marked points");
    if (conn.points.size() != inst.points.size())
        throw parse_error("certificate and instance disagree on the marked points");
    const VerifyReport rep = verify(conn, inst.residues);
    if (format == "json")
        out << verify_report_to_json(rep).dump(2) << "\n";
    else
        out << verify_report_to_text(rep);
    return rep.pass() ? kExitYes : kExitNo;
}

int run_rigidity(const std::string& path, const std::string& format, std::ostream& out) {
    const Instance inst = load_instance(path);
    bool all_rigid = true;
    Json jpoints = Json::array();
    std::ostringstream text;
    for (const Scalar& x : inst.points.points()) {
        const bool rigid = is_rigid(inst.splitting, x, inst.residues.at(x));
        all_rigid = all_rigid && rigid;
        text << "point " << scalar_to_string(x) << ": " << (rigid ? "rigid" : "not rigid") << "\n";
        Json p;
        p["point"] = scalar_to_string(x);
        p["rigid"] = rigid;
        jpoints.push_back(std::move(p));
    }
    Json j;
    j["version"] = kSchemaVersion;
    j["points"] = std::move(jpoints);
    j["all_rigid"] = all_rigid;
    bool satisfied = false;
    if (all_rigid) {
        const std::vector<Scalar> cond = summand_conditions(inst);
        satisfied = std::all_of(cond.begin(), cond.end(), [](const Scalar& c) { return c == 0; });
        text << "summand conditions: (";
        Json jcond = Json::array();
        for (std::size_t i = 0; i < cond.size(); ++i) {
            if (i > 0) text << ", ";
            text << scalar_to_string(cond[i]);
            jcond.push_back(scalar_to_string(cond[i]));
        }
        text << ")\ncriterion satisfied: " << (satisfied ? "true" : "false") << "\n";
        j["summand_conditions"] = std::move(jcond);
        j["criterion"] = satisfied;
    }
    if (format == "json")
        out << j.dump(2) << "\n";
    else
        out << text.str();
    return (all_rigid && satisfied) ? kExitYes : kExitNo;
}

int run_basis(const std::string& splitting_arg, const std::string& format, std::ostream& out) {
    const SplittingType st(parse_splitting_arg(splitting_arg));
    const std::vector<EndoSection> basis = global_end_basis(st);
    if (format == "json") {
        Json j;
        j["version"] = kSchemaVersion;
        j["splitting_type"] = st.degrees();
        Json arr = Json::array();
        for (const EndoSection& sec : basis) {
            Json e;
            e["label"] = sec.label;
            Json rows = Json::array();
            for (int i = 0; i < sec.entries.rows(); ++i) {
                Json row = Json::array();
                for (int k = 0; k < sec.entries.cols(); ++k) row.push_back(poly_to_json(sec.entries(i, k)));
                rows.push_back(std::move(row));
            }
            e["entries"] = std::move(rows);
            arr.push_back(std::move(e));
        }
        j["basis"] = std::move(arr);
        out << j.dump(2) << "\n";
    } else {
        out << "dim H0(End) = " << basis.size() << "\n";
        for (const EndoSection& sec : basis) out << "  " << sec.label << "\n";
    }
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"logconn - logarithmic connections with prescribed residues on the projective line"};
    app.require_subcommand(1);

    std::string instance_path, cert_path, out_path, batch_dir, splitting_arg;
    std::string fmt_decide = "text", fmt_synth = "json", fmt_verify = "text", fmt_rigid = "text",
                fmt_basis = "text";

    CLI::App* decide = app.add_subcommand("decide", "decide whether a connection with the prescribed residues exists");
    decide->add_option("instance", instance_path, "instance JSON file");
    decide->add_option("--batch", batch_dir, "process every .json instance in a directory");
    decide->add_option("--format", fmt_decide, "output format")
        ->check(CLI::IsMember({"json", "text", "latex"}));

    CLI::App* synth = app.add_subcommand("synthesize", "construct a verified connection certificate");
    synth->add_option("instance", instance_path, "instance JSON file")->required();
    synth->add_option("--out", out_path, "write certificate JSON here (default: stdout)");
    synth->add_option("--format", fmt_synth, "stdout format")
        ->check(CLI::IsMember({"json", "text", "latex"}));

    CLI::App* ver = app.add_subcommand("verify", "check a claimed certificate against an instance");
    ver->add_option("certificate", cert_path, "certificate JSON file")->required();
    ver->add_option("instance", instance_path, "instance JSON file")->required();
    ver->add_option("--format", fmt_verify, "output format")->check(CLI::IsMember({"json", "text"}));

    CLI::App* rig = app.add_subcommand("rigidity", "per-point rigidity verdicts and the summand criterion");
    rig->add_option("instance", instance_path, "instance JSON file")->required();
    rig->add_option("--format", fmt_rigid, "output format")->check(CLI::IsMember({"json", "text"}));

    CLI::App* bas = app.add_subcommand("basis", "dump the global endomorphism basis (debugging)");
    bas->add_option("--splitting", splitting_arg, "comma-separated degrees, e.g. 1,-1")->required();
    bas->add_option("--format", fmt_basis, "output format")->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) {
            if (!batch_dir.empty()) return run_decide_batch(batch_dir, std::cout);
            if (instance_path.empty()) {
                std::cerr << "error: decide needs an instance file or --batch\n";
                return kExitInputError;
            }
            return run_decide_one(instance_path, fmt_decide, std::cout);
        }
        if (synth->parsed()) return run_synthesize(instance_path, out_path, fmt_synth, std::cout);
        if (ver->parsed()) return run_verify(cert_path, instance_path, fmt_verify, std::cout);
        if (rig->parsed()) return run_rigidity(instance_path, fmt_rigid, std::cout);
        if (bas->parsed()) return run_basis(splitting_arg, fmt_basis, std::cout);
    } catch (const logconn::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
