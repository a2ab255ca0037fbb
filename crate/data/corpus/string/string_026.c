void reverse(char *str)
{
    int lo = 0, hi = strlen(str) - 1;
    char t;
    while (lo < hi) {
        t = str[lo];
        str[lo] = str[hi];
        str[hi] = t;
        lo++;
        hi--;
    }
}

int main()
{
    char str[256];
    scanf("%s", str);
    reverse(str);
    printf("%s\n", str);
    return 0;
}
