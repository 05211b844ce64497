#include "series_engine.hpp"

namespace besselhr::detail {

SeriesOut run_series_double(const SeriesJob& job)
{
    Engine<double, std::complex<double>> eng{16, 2.220446049250313e-16};
    return eng.run(job);
}

}  // namespace besselhr::detail
