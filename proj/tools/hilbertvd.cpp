// Batch front end: every command reads a scene file and writes a JSON report
// (stdout unless --json is given) and, optionally, an SVG figure.
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hilbertvd/commands.hpp"
#include "hilbertvd/error.hpp"
#include "hilbertvd/session.hpp"

namespace {

using namespace hilbertvd;

constexpr int kGeometricError = 2;
constexpr int kIoError = 3;

SessionServer* g_server = nullptr;

Point parse_point(const std::string& text) {
    double x = 0.0, y = 0.0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf%c", &x, &y, &tail) != 2) {
        fail(ErrorKind::InvalidArgument, "expected a point as x,y but got '" + text + "'");
    }
    return {x, y};
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) fail(ErrorKind::IoError, "cannot write " + path);
}

void report_error(const Error& e) {
    Json j{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Voronoi diagrams, mosaics, regions and clustering in the Hilbert metric"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    std::string scene_path;
    std::string json_path = "-";
    std::string svg_path;
    bool no_timestamp = false;
    app.add_option("--scene,-s", scene_path, "scene JSON file")->required();
    app.add_option("--json", json_path, "JSON report path ('-' for stdout)");
    app.add_option("--svg", svg_path, "SVG figure path");
    app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp comment from SVG output");

    std::string p_text, q_text;
    double radius = 0.0;
    int i = 0, j = 0, k = 0;
    int order = 0;
    bool all_orders = false;
    int resolution = 400;
    int port = 0;
    std::string method = "kmeans";
    ClusterRequest cluster;

    auto* distance = app.add_subcommand("distance", "distance from p to q (and back)");
    distance->add_option("p", p_text, "x,y")->required();
    distance->add_option("q", q_text, "x,y")->required();

    auto* ball = app.add_subcommand("ball", "metric ball boundary");
    ball->add_option("center", p_text, "x,y")->required();
    ball->add_option("radius", radius)->required();

    auto* bisector = app.add_subcommand("bisector", "bisector of two sites");
    bisector->add_option("i", i)->required();
    bisector->add_option("j", j)->required();

    auto* circumcenter = app.add_subcommand("circumcenter", "circumcenters of three sites");
    circumcenter->add_option("i", i)->required();
    circumcenter->add_option("j", j)->required();
    circumcenter->add_option("k", k)->required();

    auto* voronoi = app.add_subcommand("voronoi", "order-k Voronoi diagrams");
    auto* voronoi_order = voronoi->add_option("--order", order, "order k in 1..n-1");
    voronoi->add_flag("--all", all_orders, "every order 1..n-1")->excludes(voronoi_order);

    auto* delaunay = app.add_subcommand("delaunay", "order-k Delaunay mosaic");
    delaunay->add_option("--order", order, "order k in 1..n-1")->required();

    auto* regions = app.add_subcommand("regions", "overlap region Z and outer region W of two sites");
    regions->add_option("i", i)->required();
    regions->add_option("j", j)->required();

    auto* cluster_cmd = app.add_subcommand("cluster", "k-means or single-linkage clustering of the sites");
    cluster_cmd->add_option("--method", method, "kmeans or slink")->check(CLI::IsMember({"kmeans", "slink"}));
    cluster_cmd->add_option("--k", cluster.k, "k-means cluster count");
    cluster_cmd->add_option("--steps", cluster.steps, "k-means iterations");
    cluster_cmd->add_option("--count", cluster.count, "single linkage: clusters to keep");
    cluster_cmd->add_option("--height", cluster.height, "single linkage: merge height cut");

    auto* verify = app.add_subcommand("verify", "compare the diagram against the brute-force raster");
    auto* verify_order = verify->add_option("--order", order, "order k in 1..n-1");
    verify->add_flag("--all", all_orders, "every order 1..n-1")->excludes(verify_order);
    verify->add_option("--resolution", resolution, "raster cells per side")->check(CLI::PositiveNumber);

    auto* serve = app.add_subcommand("serve", "run the local session service");
    serve->add_option("--port", port, "TCP port on 127.0.0.1 (0 picks one)");

    CLI11_PARSE(app, argc, argv);

    try {
        const Scene scene = load_scene(scene_path);
        const int n = static_cast<int>(scene.sites.size());
        auto orders = [&]() -> std::vector<int> {
            if (!all_orders && order != 0) return {order};
            if (!all_orders) fail(ErrorKind::InvalidArgument, "give --order K or --all");
            std::vector<int> ks;
            for (int kk = 1; kk < n; ++kk) ks.push_back(kk);
            if (ks.empty()) fail(ErrorKind::EmptyInput, "need at least two sites");
            return ks;
        };

        if (serve->parsed()) {
            Session session(scene);
            SessionServer server(session, port);
            g_server = &server;
            std::signal(SIGINT, [](int) { g_server->stop(); });
            std::signal(SIGTERM, [](int) { g_server->stop(); });
            std::cout << Json{{"port", server.port()}}.dump() << std::endl;
            server.run();
            return 0;
        }

        CommandOutput out;
        if (distance->parsed()) {
            out = run_distance(scene, parse_point(p_text), parse_point(q_text));
        } else if (ball->parsed()) {
            out = run_ball(scene, parse_point(p_text), radius);
        } else if (bisector->parsed()) {
            out = run_bisector(scene, i, j);
        } else if (circumcenter->parsed()) {
            out = run_circumcenter(scene, i, j, k);
        } else if (voronoi->parsed()) {
            out = run_voronoi(scene, orders());
        } else if (delaunay->parsed()) {
            out = run_delaunay(scene, order);
        } else if (regions->parsed()) {
            out = run_regions(scene, i, j);
        } else if (cluster_cmd->parsed()) {
            cluster.method = parse_cluster_method(method);
            out = run_cluster(scene, cluster);
        } else if (verify->parsed()) {
            out = run_verify(scene, orders(), resolution);
        }

        write_text(json_path, out.json.dump(2) + "\n");
        if (!svg_path.empty()) {
            if (!out.svg) fail(ErrorKind::InvalidArgument, "this command does not draw a figure");
            write_text(svg_path, out.svg->str(!no_timestamp));
        }
    } catch (const Error& e) {
        report_error(e);
        return e.is_io() ? kIoError : kGeometricError;
    }
    return 0;
}
