#pragma once

// Published reference values for the golden checks. Correlation rows list
// r for the ten standard properties in table order; average rows list
// member/non-member pairs of P(Cmax), <C>, ratio and delta ratio.

#include <array>
#include <optional>
#include <vector>

namespace qgl::reference {

inline constexpr std::optional<double> kNA = std::nullopt;

struct CorrelationRow {
  int n;
  int p;
  std::array<std::optional<double>, 10> r;
};

struct AverageRow {
  int n;
  int p;
  /// prob, exp_c, ratio, delta; index 0 members, 1 non-members.
  std::array<std::array<std::optional<double>, 2>, 4> values;
};

inline const std::vector<CorrelationRow> kProbCorrelations{
    {4, 0, {-0.781, 0.577, -0.894, -1.0, -0.447, 0.0, 0.447, -0.866, -0.307, -0.243}},
    {4, 1, {0.363, -0.535, 0.558, 0.398, 0.03, 0.437, -0.085, 0.346, 0.507, 0.015}},
    {4, 2, {0.561, -0.83, 0.421, 0.247, -0.512, 0.809, -0.769, 0.354, 0.663, -0.513}},
    {4, 3, {0.462, -0.786, 0.386, 0.41, -0.222, 0.352, -0.772, 0.355, 0.359, -0.121}},
    {5, 0, {0.505, -0.287, 0.444, -0.141, -0.214, 0.45, -0.152, 0.479, 0.767, -0.417}},
    {5, 1, {0.166, -0.387, 0.243, 0.238, -0.662, 0.661, -0.11, 0.217, 0.531, -0.619}},
    {5, 2, {0.018, -0.339, -0.016, 0.047, -0.447, 0.441, -0.128, 0.004, 0.411, -0.675}},
    {5, 3, {0.071, -0.233, 0.04, -0.027, -0.371, 0.277, -0.127, 0.056, 0.296, -0.619}},
    {6, 0, {0.3, -0.177, 0.209, -0.027, -0.371, 0.155, -0.147, 0.301, 0.191, -0.271}},
    {6, 1, {-0.016, -0.17, 0.043, 0.112, -0.301, 0.222, 0.011, 0.012, 0.232, -0.221}},
    {6, 2, {-0.094, -0.183, -0.123, -0.069, -0.281, 0.252, 0.011, -0.148, 0.272, -0.324}},
    {6, 3, {-0.059, -0.131, -0.126, -0.153, -0.271, 0.263, -0.031, -0.147, 0.209, -0.441}},
    {7, 0, {0.297, -0.189, 0.287, 0.007, -0.22, 0.015, -0.133, 0.326, 0.043, -0.208}},
    {7, 1, {-0.11, -0.027, -0.037, 0.05, -0.354, 0.216, 0.052, -0.058, 0.202, -0.224}},
    {7, 2, {-0.14, -0.012, -0.167, -0.058, -0.298, 0.15, 0.053, -0.158, 0.148, -0.309}},
    {7, 3, {-0.145, 0.024, -0.207, -0.1, -0.252, 0.101, 0.066, -0.201, 0.104, -0.344}},
    {8, 0, {0.256, -0.192, 0.239, 0.028, -0.131, 0.003, -0.115, 0.286, 0.015, -0.045}},
    {8, 1, {-0.198, 0.056, -0.124, 0.009, -0.198, 0.029, 0.067, -0.158, 0.056, -0.101}},
    {8, 2, {-0.194, 0.062, -0.21, -0.061, -0.191, 0.047, 0.066, -0.223, 0.057, -0.178}},
    {8, 3, {-0.201, 0.094, -0.237, -0.092, -0.169, 0.046, 0.078, -0.258, 0.04, -0.214}},
};

inline const std::vector<CorrelationRow> kExpCCorrelations{
    {4, 0, {1.0, -0.812, 0.908, 0.781, 0.07, 0.552, -0.768, 0.947, 0.746, -0.417}},
    {4, 1, {0.983, -0.786, 0.824, 0.672, -0.101, 0.669, -0.819, 0.876, 0.761, -0.548}},
    {4, 2, {0.799, -0.639, 0.479, 0.355, -0.481, 0.761, -0.92, 0.583, 0.608, -0.725}},
    {4, 3, {0.783, -0.586, 0.45, 0.338, -0.448, 0.709, -0.901, 0.579, 0.572, -0.725}},
    {5, 0, {1.0, -0.673, 0.845, 0.558, -0.247, 0.267, -0.691, 0.951, 0.527, -0.424}},
    {5, 1, {0.989, -0.671, 0.774, 0.495, -0.255, 0.305, -0.739, 0.908, 0.527, -0.464}},
    {5, 2, {0.889, -0.641, 0.571, 0.256, -0.118, 0.18, -0.781, 0.73, 0.456, -0.463}},
    {5, 3, {0.844, -0.564, 0.514, 0.234, -0.087, 0.072, -0.757, 0.679, 0.353, -0.369}},
    {6, 0, {1.0, -0.673, 0.768, 0.466, -0.052, 0.189, -0.684, 0.933, 0.323, -0.277}},
    {6, 1, {0.991, -0.676, 0.697, 0.401, -0.073, 0.221, -0.729, 0.886, 0.319, -0.305}},
    {6, 2, {0.926, -0.662, 0.544, 0.25, -0.087, 0.256, -0.75, 0.749, 0.312, -0.351}},
    {6, 3, {0.875, -0.618, 0.468, 0.178, -0.098, 0.264, -0.747, 0.676, 0.274, -0.372}},
    {7, 0, {1.0, -0.683, 0.722, 0.329, -0.079, 0.056, -0.655, 0.924, 0.147, -0.225}},
    {7, 1, {0.994, -0.695, 0.663, 0.295, -0.081, 0.057, -0.698, 0.884, 0.142, -0.227}},
    {7, 2, {0.953, -0.684, 0.558, 0.214, -0.074, 0.044, -0.711, 0.79, 0.132, -0.245}},
    {7, 3, {0.916, -0.651, 0.5, 0.169, -0.067, 0.03, -0.697, 0.731, 0.116, -0.252}},
    {8, 0, {1.0, -0.691, 0.682, 0.222, -0.021, 0.024, -0.603, 0.913, 0.05, -0.123}},
    {8, 1, {0.995, -0.707, 0.629, 0.203, -0.024, 0.028, -0.646, 0.876, 0.048, -0.117}},
    {8, 2, {0.967, -0.698, 0.55, 0.158, -0.026, 0.034, -0.652, 0.803, 0.046, -0.136}},
    {8, 3, {0.936, -0.671, 0.507, 0.125, -0.028, 0.04, -0.64, 0.752, 0.042, -0.153}},
};

inline const std::vector<CorrelationRow> kRatioCorrelations{
    {4, 0, {0.857, -0.74, 0.988, 0.926, 0.414, 0.252, -0.446, 0.926, 0.602, 0.017}},
    {4, 1, {0.635, -0.576, 0.886, 0.819, 0.515, 0.125, -0.133, 0.753, 0.491, 0.206}},
    {4, 2, {0.747, -0.8, 0.552, 0.44, -0.512, 0.81, -0.882, 0.525, 0.63, -0.52}},
    {4, 3, {0.466, -0.785, 0.389, 0.416, -0.219, 0.347, -0.777, 0.36, 0.356, -0.119}},
    {5, 0, {0.77, -0.592, 0.856, 0.744, -0.414, 0.389, -0.397, 0.849, 0.499, -0.421}},
    {5, 1, {0.428, -0.4, 0.569, 0.599, -0.51, 0.549, -0.164, 0.546, 0.421, -0.463}},
    {5, 2, {0.125, -0.39, 0.152, 0.091, -0.335, 0.483, -0.154, 0.147, 0.424, -0.648}},
    {5, 3, {0.138, -0.35, 0.103, 0.06, -0.373, 0.318, -0.206, 0.116, 0.329, -0.666}},
    {6, 0, {0.72, -0.53, 0.8, 0.681, -0.04, 0.061, -0.35, 0.822, 0.246, -0.116}},
    {6, 1, {0.374, -0.314, 0.539, 0.541, -0.066, 0.051, -0.103, 0.515, 0.192, -0.071}},
    {6, 2, {0.166, -0.3, 0.218, 0.234, -0.133, 0.14, -0.05, 0.193, 0.258, -0.212}},
    {6, 3, {0.042, -0.231, -0.035, -0.057, -0.256, 0.298, -0.099, -0.033, 0.234, -0.42}},
    {7, 0, {0.687, -0.489, 0.727, 0.494, -0.12, 0.074, -0.337, 0.794, 0.127, -0.158}},
    {7, 1, {0.315, -0.258, 0.442, 0.387, -0.14, 0.112, -0.113, 0.462, 0.107, -0.116}},
    {7, 2, {0.143, -0.21, 0.182, 0.207, -0.164, 0.134, -0.063, 0.206, 0.13, -0.202}},
    {7, 3, {0.035, -0.128, -0.015, 0.028, -0.182, 0.117, -0.023, 0.01, 0.112, -0.305}},
    {8, 0, {0.671, -0.469, 0.666, 0.347, -0.032, -0.007, -0.314, 0.778, 0.039, -0.034}},
    {8, 1, {0.299, -0.247, 0.383, 0.276, -0.042, -0.009, -0.129, 0.443, 0.031, 0.024}},
    {8, 2, {0.157, -0.197, 0.163, 0.175, -0.063, 0.004, -0.082, 0.227, 0.037, -0.015}},
    {8, 3, {0.051, -0.115, -0.002, 0.043, -0.09, 0.031, -0.037, 0.043, 0.039, -0.107}},
};

inline const std::vector<CorrelationRow> kDeltaCorrelations{
    {4, 1, {0.295, -0.362, 0.619, 0.513, 0.451, 0.079, 0.192, 0.418, 0.368, 0.288}},
    {4, 2, {0.701, -0.766, 0.412, 0.192, -0.567, 0.897, -0.901, 0.465, 0.742, -0.809}},
    {4, 3, {0.362, -0.979, 0.483, 0.483, kNA, kNA, -0.682, 0.362, 0.511, 0.422}},
    {5, 1, {0.175, -0.276, 0.305, 0.306, -0.612, 0.645, -0.001, 0.271, 0.487, -0.495}},
    {5, 2, {0.015, -0.347, -0.045, -0.14, -0.49, 0.571, -0.14, -0.011, 0.507, -0.71}},
    {5, 3, {0.204, -0.251, 0.177, 0.095, -0.423, kNA, -0.114, 0.158, 0.7, -0.623}},
    {6, 1, {-0.045, -0.053, 0.139, 0.209, -0.11, 0.112, 0.149, 0.077, 0.2, -0.078}},
    {6, 2, {-0.153, -0.124, -0.24, -0.203, -0.228, 0.31, 0.045, -0.252, 0.395, -0.318}},
    {6, 3, {-0.003, -0.152, -0.139, -0.206, -0.393, 0.438, -0.099, -0.119, 0.337, -0.545}},
    {7, 1, {-0.157, 0.045, 0.018, 0.122, -0.182, 0.18, 0.148, -0.025, 0.16, -0.09}},
    {7, 2, {-0.235, 0.012, -0.324, -0.146, -0.244, 0.226, 0.08, -0.315, 0.235, -0.237}},
    {7, 3, {-0.114, 0.029, -0.21, -0.159, -0.308, 0.211, 0.069, -0.208, 0.176, -0.392}},
    {8, 1, {-0.237, 0.09, -0.078, 0.078, -0.057, 0.007, 0.124, -0.104, 0.041, 0.053}},
    {8, 2, {-0.259, 0.048, -0.389, -0.091, -0.102, 0.045, 0.077, -0.361, 0.079, -0.077}},
    {8, 3, {-0.187, 0.107, -0.279, -0.159, -0.166, 0.082, 0.088, -0.302, 0.083, -0.226}},
};

inline const std::vector<AverageRow> kBipartiteAverages{
    {4, 0, {{{0.125, 0.0625}, {1.667, 2.5}, {0.5, 0.681}, {kNA, kNA}}}},
    {4, 1, {{{0.481, 0.602}, {2.566, 3.216}, {0.772, 0.879}, {0.544, 0.634}}}},
    {4, 2, {{{0.889, 0.928}, {3.18, 3.586}, {0.949, 0.978}, {0.762, 0.825}}}},
    {4, 3, {{{0.993, 0.999}, {3.326, 3.666}, {0.998, 1.0}, {0.973, 0.994}}}},
    {5, 0, {{{0.0625, 0.049}, {2.3, 3.344}, {0.5, 0.658}, {kNA, kNA}}}},
    {5, 1, {{{0.368, 0.495}, {3.436, 4.323}, {0.75, 0.857}, {0.5, 0.605}}}},
    {5, 2, {{{0.746, 0.725}, {4.222, 4.685}, {0.918, 0.928}, {0.661, 0.587}}}},
    {5, 3, {{{0.907, 0.9}, {4.47, 4.926}, {0.97, 0.974}, {0.731, 0.744}}}},
    {6, 0, {{{0.031, 0.028}, {3.118, 4.447}, {0.5, 0.644}, {kNA, kNA}}}},
    {6, 1, {{{0.26, 0.311}, {4.542, 5.672}, {0.733, 0.826}, {0.465, 0.522}}}},
    {6, 2, {{{0.586, 0.549}, {5.449, 6.179}, {0.873, 0.9}, {0.519, 0.442}}}},
    {6, 3, {{{0.818, 0.744}, {5.949, 6.506}, {0.951, 0.946}, {0.62, 0.511}}}},
    {7, 0, {{{0.016, 0.016}, {3.875, 5.693}, {0.067, 0.074}, {kNA, kNA}}}},
    {7, 1, {{{0.182, 0.213}, {5.554, 7.187}, {0.438, 0.482}, {0.182, 0.213}}}},
    {7, 2, {{{0.469, 0.424}, {6.598, 7.827}, {0.851, 0.886}, {0.464, 0.396}}}},
    {7, 3, {{{0.691, 0.605}, {7.201, 8.225}, {0.927, 0.93}, {0.519, 0.409}}}},
    {8, 0, {{{0.008, 0.011}, {4.797, 7.246}, {0.5, 0.646}, {kNA, kNA}}}},
    {8, 1, {{{0.133, 0.139}, {6.773, 9.022}, {0.71, 0.808}, {0.42, 0.462}}}},
    {8, 2, {{{0.385, 0.317}, {7.983, 9.801}, {0.832, 0.877}, {0.42, 0.367}}}},
    {8, 3, {{{0.606, 0.482}, {8.762, 10.273}, {0.911, 0.92}, {0.467, 0.35}}}},
};

inline const std::vector<AverageRow> kEulerianAverages{
    {4, 0, {{{0.125, 0.088}, {2.0, 2.1}, {0.5, 0.608}, {kNA, kNA}}}},
    {4, 1, {{{0.531, 0.543}, {3.0, 2.869}, {0.75, 0.841}, {0.5, 0.607}}}},
    {4, 2, {{{1.0, 0.89}, {4.0, 3.26}, {1.0, 0.956}, {1.0, 0.752}}}},
    {4, 3, {{{1.0, 0.995}, {4.0, 3.395}, {1.0, 0.998}, {1.0, 0.98}}}},
    {5, 0, {{{0.07, 0.048}, {3.5, 3.0}, {0.698, 0.602}, {kNA, kNA}}}},
    {5, 1, {{{0.775, 0.392}, {4.513, 4.017}, {0.912, 0.813}, {0.764, 0.537}}}},
    {5, 2, {{{0.913, 0.687}, {4.762, 4.531}, {0.96, 0.918}, {0.831, 0.551}}}},
    {5, 3, {{{0.99, 0.881}, {4.965, 4.782}, {0.994, 0.968}, {0.963, 0.689}}}},
    {6, 0, {{{0.078, 0.025}, {4.438, 4.231}, {0.633, 0.621}, {kNA, kNA}}}},
    {6, 1, {{{0.481, 0.29}, {5.766, 5.48}, {0.827, 0.811}, {0.552, 0.51}}}},
    {6, 2, {{{0.749, 0.539}, {6.397, 6.043}, {0.915, 0.894}, {0.566, 0.445}}}},
    {6, 3, {{{0.925, 0.742}, {6.816, 6.391}, {0.976, 0.945}, {0.796, 0.507}}}},
    {7, 0, {{{0.041, 0.015}, {6.054, 5.578}, {0.075, 0.074}, {kNA, kNA}}}},
    {7, 1, {{{0.431, 0.201}, {7.57, 7.081}, {0.843, 0.807}, {0.569, 0.475}}}},
    {7, 2, {{{0.666, 0.415}, {8.203, 7.744}, {0.912, 0.883}, {0.518, 0.394}}}},
    {7, 3, {{{0.833, 0.6}, {8.597, 8.153}, {0.955, 0.929}, {0.609, 0.406}}}},
    {8, 0, {{{0.027, 0.011}, {7.438, 7.202}, {0.656, 0.643}, {kNA, kNA}}}},
    {8, 1, {{{0.276, 0.137}, {9.245, 8.981}, {0.82, 0.806}, {0.491, 0.461}}}},
    {8, 2, {{{0.525, 0.315}, {10.067, 9.766}, {0.893, 0.876}, {0.426, 0.366}}}},
    {8, 3, {{{0.708, 0.48}, {10.58, 10.242}, {0.937, 0.919}, {0.472, 0.35}}}},
};

/// Sign of the mean r over p = 1..3 at n = 8: rows are the ten properties,
/// columns <C>, P(Cmax), ratio, delta ratio.
inline constexpr std::array<const char*, 10> kSignGrid{
    "+-+-", "- - ", "+-+-", "+ + ", " - -", "    ", "-   ", "+-+-", "    ", "--  "};

}  // namespace qgl::reference
