int main()
{
    char s[1000], x;
    int cnt = 0, k = 0;
    gets(s);
    for (; s[k]; k++) {
        x = tolower(s[k]);
        if (x == 'a' || x == 'e' || x == 'i' || x == 'o' || x == 'u')
            cnt++;
    }
    printf("%d\n", cnt);
    return 0;
}
