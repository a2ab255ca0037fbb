int main(void)
{
    double d = 3.7;
    int i = (int)d;
    char *p = (char *)&i;
    unsigned long n = sizeof(int *) + sizeof i + sizeof(d) + sizeof(char[4]);
    void *v = (void *)0;
    long l = (long)(unsigned char)p[0];
    int (*fp)(int) = (int (*)(int))v;
    return (int)n + (int)l;
}
