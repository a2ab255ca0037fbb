int add(int a, int b) { return a + b; }
int apply(int (*op)(int, int), int x, int y)
{
    return op(x, y);
}
int (*table[2])(int, int) = {add, add};
int main(void)
{
    int (*f)(int, int) = add;
    return apply(f, 1, 2) + (*f)(3, 4) + table[1](5, 6);
}
