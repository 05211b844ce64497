#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "series_engine.hpp"

namespace besselhr::detail {

SeriesOut run_series_mp50(const SeriesJob& job)
{
    using R = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>>;
    using C = boost::multiprecision::cpp_complex<50>;
    Engine<R, C> eng{50, boost::multiprecision::pow(R(10), -50)};
    return eng.run(job);
}

}  // namespace besselhr::detail
