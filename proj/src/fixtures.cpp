#include "cyccubic/report.hpp"

namespace cyccubic {

// Reference rows for n2 = 2, 3, 5, 7, 11.
const char* embedded_fixture_csv()
{
    return
        "n1,n2,DL,case,delta,a0,a1,alpha_c,alpha_rho,alpha_rhoprime\n"
        "-1,2,31^2,1,31,1,0,0,2,0\n"
        "1,2,43^2,1,43,1,0,0,2,0\n"
        "-2,3,67^2,1,67,1,0,1,3,0\n"
        "-1,3,73^2,1,73,1,0,0,3,0\n"
        "1,3,7^2*13^2,1,7*13,1,0,0,3,0\n"
        "2,3,103^2,1,103,1,0,-1,3,0\n"
        "-4,5,181^2,1,181,1,0,1,5,0\n"
        "-3,5,3^4*7^2,3i,3^3*7,1,-1,0,5/3,-5/3\n"
        "-2,5,199^2,1,199,1,0,1,5,0\n"
        "-1,5,211^2,1,211,1,0,0,5,0\n"
        "1,5,241^2,1,241,1,0,0,5,0\n"
        "2,5,7^2*37^2,1,7*37,1,0,-1,5,0\n"
        "3,5,3^4*31^2,3ii,3^2*31,1,0,-1,5,0\n"
        "4,5,7^2*43^2,1,7*43,1,0,-1,5,0\n"
        "-6,7,3^4*13^2,3i,3^3*13,1,-1,0,7/3,-7/3\n"
        "-5,7,19^2,1,19^2,2,5,18/19,14/19,35/19\n"
        "-4,7,373^2,1,373,1,0,1,7,0\n"
        "-3,7,3^4*43^2,3ii,3^2*43,1,0,1,7,0\n"
        "-2,7,13^2*31^2,1,13*31,1,0,1,7,0\n"
        "-1,7,421^2,1,421,1,0,0,7,0\n"
        "1,7,463^2,1,463,1,0,0,7,0\n"
        "2,7,487^2,1,487,1,0,-1,7,0\n"
        "3,7,19^2,2,3^3*19,1,-1,1/3,7/9,-7/9\n"
        "4,7,541^2,1,541,1,0,-1,7,0\n"
        "5,7,571^2,1,571,1,0,-2,7,0\n"
        "6,7,3^4*67^2,3ii,3^2*67,1,0,-2,7,0\n"
        "-10,11,859^2,1,859,1,0,3,11,0\n"
        "-9,11,3^4*97^2,3ii,3^2*97,1,0,3,11,0\n"
        "-8,11,7^2*127^2,1,7*127,1,0,3,11,0\n"
        "-7,11,907^2,1,907,1,0,2,11,0\n"
        "-6,11,3^4*103^2,3ii,3^2*103,1,0,2,11,0\n"
        "-5,11,13^2*73^2,1,13*73,1,0,2,11,0\n"
        "-4,11,7^2*139^2,1,7*139,1,0,1,11,0\n"
        "-3,11,37^2,2,3^3*37,1,-1,-1/3,11/9,-11/9\n"
        "-2,11,13^2*79^2,1,13*79,1,0,1,11,0\n"
        "-1,11,7^2*151^2,1,7*151,1,0,0,11,0\n"
        "1,11,1123^2,1,1123,1,0,0,11,0\n"
        "2,11,19^2*61^2,1,19*61,1,0,-1,11,0\n"
        "3,11,3^4*7^2*19^2,3ii,3^2*7*19,1,0,-1,11,0\n"
        "4,11,1237^2,1,1237,1,0,-1,11,0\n"
        "5,11,1279^2,1,1279,1,0,-2,11,0\n"
        "6,11,3^4*7^2,3i,3^3*7^2,5,1,-4/7,55/21,11/21\n"
        "7,11,37^2,1,37^2,7,3,-11/37,77/37,33/37\n"
        "8,11,13^2*109^2,1,13*109,1,0,-3,11,0\n"
        "9,11,3^4*163^2,3ii,3^2*163,1,0,-3,11,0\n"
        "10,11,7^2*31^2,1,7^2*31,3,1,-11/7,33/7,11/7\n";
}

} // namespace cyccubic
