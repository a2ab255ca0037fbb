int main()
{
    char buf[1000], x;
    int cnt = 0, k = 0;
    gets(buf);
    for (; buf[k]; k++) {
        x = tolower(buf[k]);
        if (x == 'a' || x == 'e' || x == 'i' || x == 'o' || x == 'u')
            cnt++;
    }
    printf("%d\n", cnt);
    return 0;
}
