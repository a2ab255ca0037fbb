void reverse(char *str)
{
    int lo = 0, hi = strlen(str) - 1;
    char ch;
    while (lo < hi) {
        ch = str[lo];
        str[lo] = str[hi];
        str[hi] = ch;
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
