#include "multirisk/datasets.hpp"

#include <stdexcept>

#include "multirisk/table_io.hpp"

namespace multirisk {

namespace {

// Breast cancer cross-tabulation: malignancy degree (rows 1..3) by age
// group (columns 30s..70s), as counts out of 285 individuals. The usual
// published form rounds these to three decimals; the exact fractions are
// what reproduce the reported thresholds and risk figures.
constexpr int kBreastCancerCounts[3][5] = {
    {7, 18, 25, 17, 4},
    {17, 48, 39, 24, 1},
    {12, 24, 32, 16, 1},
};
constexpr double kBreastCancerTotal = 285.0;

// Household classification: yearly income group (rows Y1..Y10) by
// household age group (columns H1..H6), relative frequencies from the
// 2014 National Survey of Family Income and Expenditure. The published
// five-decimal entries sum to 1.00004 and are renormalized on load.
constexpr double kHousehold[10][6] = {
    {0.00161, 0.00232, 0.00512, 0.00395, 0.00468, 0.00066},
    {0.00331, 0.0081, 0.00953, 0.00783, 0.01145, 0.00278},
    {0.00974, 0.02109, 0.02046, 0.01499, 0.02536, 0.00494},
    {0.00799, 0.03519, 0.03229, 0.02017, 0.0338, 0.00708},
    {0.00547, 0.0376, 0.04362, 0.02442, 0.02675, 0.00398},
    {0.00494, 0.05082, 0.09003, 0.05772, 0.03732, 0.00452},
    {0.00126, 0.02106, 0.0543, 0.05531, 0.01999, 0.00234},
    {0.00071, 0.00961, 0.0323, 0.04043, 0.0108, 0.00122},
    {0.00011, 0.00201, 0.01204, 0.02184, 0.00466, 0.00052},
    {0.00006, 0.00139, 0.00697, 0.01582, 0.00344, 0.00022},
};

BundledExample make_example(int id) {
    BundledExample ex;
    ex.id = id;
    GroupSpec by_cols;
    by_cols.kind = GroupSpec::Kind::ByCols;
    switch (id) {
        case 1: {
            ex.name = "uniform-100x2";
            ex.matrix.assign(100, std::vector<double>(2, 1.0 / 200.0));
            ex.sample_sizes = {100, 200, 300, 400, 500, 1000, 2000};
            break;
        }
        case 2: {
            ex.name = "breast-cancer";
            for (const auto& row : kBreastCancerCounts) {
                std::vector<double> r;
                for (int c : row) r.push_back(static_cast<double>(c) / kBreastCancerTotal);
                ex.matrix.push_back(std::move(r));
            }
            ex.sample_sizes = {200, 400, 600, 800, 1000};
            break;
        }
        case 3: {
            ex.name = "household";
            for (const auto& row : kHousehold) {
                ex.matrix.emplace_back(row, row + 6);
            }
            ex.sample_sizes = {1000, 1500, 2000, 2500, 3000};
            break;
        }
        default:
            throw std::invalid_argument("bundled example id must be 1, 2 or 3");
    }
    TableFile file;
    file.matrix = ex.matrix;
    file.groups = by_cols;
    ex.table = to_prob_table(file, std::nullopt, /*renormalize=*/id == 3);
    return ex;
}

}  // namespace

const BundledExample& bundled_example(int id) {
    static const BundledExample one = make_example(1);
    static const BundledExample two = make_example(2);
    static const BundledExample three = make_example(3);
    switch (id) {
        case 1:
            return one;
        case 2:
            return two;
        case 3:
            return three;
        default:
            throw std::invalid_argument("bundled example id must be 1, 2 or 3");
    }
}

}  // namespace multirisk
