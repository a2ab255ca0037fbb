// reverse a string in place
int main()
{
    char s[256], ch;
    int lo, hi;
    scanf("%s", s);
    for (lo = 0, hi = strlen(s) - 1; lo < hi; lo++, hi--) {
        ch = s[lo];
        s[lo] = s[hi];
        s[hi] = ch;
    }
    puts(s);
    return 0;
}
