int f(int);
void g(int a[], int n);
double h(double (*op)(double), double x);
int main();
int k(void);
void m(const char *);
