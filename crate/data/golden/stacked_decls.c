int main(void)
{
    int a = 1, b, *c = &a, d[2] = {3, 4};
    char s[10], *t = s, **u = &t;
    b = a;
    return b + *c + d[1] + (**u == 0);
}
