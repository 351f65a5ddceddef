#pragma once

namespace hilbertvd {

// Every numeric tolerance used by the engine. "relative" entries scale with
// the quantity they guard (a distance, or the domain diameter).
struct Tolerances {
    double boundary = 1e-9;           // absolute clearance from the boundary, scene units
    double ball = 1e-7;               // relative radius error on ball vertices
    double infinite_ball = 1e-4;      // bisector parameter offset of limit balls
    double bisector = 1e-8;           // relative equidistance error of bisector samples
    double flat = 1e-4;               // polyline deviation, relative to domain diameter
    int max_samples_per_piece = 64;
    int min_intervals_per_piece = 4;  // scan density for circumcenter search
    double circumcenter = 1e-8;       // relative equidistance error; also event merge gap in t
    double snap = 1e-6;               // vertex snapping, relative to domain diameter
    double optimum = 1e-7;            // Frechet mean certificate
    int frechet_max_iterations = 200;
    double kernel_area = 1e-9;        // kernel area relative to polygon area
};

}  // namespace hilbertvd
