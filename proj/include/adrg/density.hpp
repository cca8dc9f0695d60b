#ifndef ADRG_DENSITY_HPP
#define ADRG_DENSITY_HPP

#include <string>
#include <vector>

#include "adrg/core.hpp"

namespace adrg {

/**
 * Piecewise-exponential atmosphere built from an (altitude, density)
 * table: within a band the density follows the exponential through the
 * two bounding rows. Above the last row the density is zero; below the
 * first row the altitude is out of the model domain.
 */
class DensityTable {
public:
    struct Row {
        double altitude_km;
        double density_kg_m3;
    };

    DensityTable() = default;
    explicit DensityTable(std::vector<Row> rows);

    // CSV rows "altitude_km,density_kg_m3", monotone in altitude.
    static DensityTable load_csv(const std::string& path);

    // 36-band CIRA-like exponential table, 100-1500 km.
    static const DensityTable& layered_exponential();
    // Harris-Priester mean-activity table (mean of the min/max columns).
    static const DensityTable& harris_priester();

    // kg/m^3; throws AltitudeOutOfRange below the table floor.
    double density(double altitude_km) const;

    // d(ln rho)/dh within the containing band, 1/km; zero above ceiling.
    double log_slope(double altitude_km) const;

    double floor_km() const { return rows_.front().altitude_km; }
    double ceiling_km() const { return rows_.back().altitude_km; }

private:
    std::vector<Row> rows_;
};

enum class DensityModel { layered_exponential, harris_priester_table };

const DensityTable& density_table(DensityModel model);

} // namespace adrg

#endif
