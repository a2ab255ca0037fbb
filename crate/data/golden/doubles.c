double doubles(double doublee){ return 2 * doublee; }
