#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "series_engine.hpp"

namespace besselhr::detail {

SeriesOut run_series_mp200(const SeriesJob& job)
{
    using R = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
    using C = boost::multiprecision::cpp_complex<200>;
    Engine<R, C> eng{200, boost::multiprecision::pow(R(10), -200)};
    return eng.run(job);
}

}  // namespace besselhr::detail
